#include "sdmin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sdmin/engine_factory.hpp"
#include "sdmin/trie.hpp"

namespace sdmin {

namespace {

std::vector<Letter> synthetic_letters(std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Letter> s(static_cast<std::size_t>(n));
  for (Letter& a : s) a = static_cast<Letter>('A' + rng() % 4);
  return s;
}

struct RunOutcome {
  std::uint64_t ops = 0;
  std::uint64_t checksum = 0;
  EngineStats stats;
};

RunOutcome run_slide(const BenchSpec& spec, bool oscillate) {
  HashConfig cfg = HashConfig::from_seed(spec.k, spec.seed);
  if (spec.engine == EngineKind::Deque && oscillate)
    throw unsupported_operation("the monotonic queue cannot slide in both directions");
  auto engine = make_engine(spec.engine, cfg, spec.mode, spec.scheme,
                            DequeOrientation::LeftToRight);
  std::vector<Letter> s = synthetic_letters(spec.n, spec.seed + 1);
  std::int64_t window_letters = static_cast<std::int64_t>(spec.w) + spec.k - 1;
  if (spec.n < window_letters) throw std::invalid_argument("n is smaller than one window");
  RunOutcome out;
  auto query = [&] {
    auto m = engine->minimizer();
    if (m) out.checksum = out.checksum * 31 + static_cast<std::uint64_t>(m->pos);
  };
  for (std::int64_t i = 0; i < window_letters; ++i)
    engine->append(s[static_cast<std::size_t>(i)]);
  query();
  for (std::int64_t i = window_letters; i < spec.n; ++i) {
    engine->append(s[static_cast<std::size_t>(i)]);
    engine->delete_first();
    query();
  }
  if (oscillate) {
    std::vector<Letter> back = synthetic_letters(spec.n, spec.seed + 2);
    for (std::int64_t i = 0; i < spec.n; ++i) {
      engine->prepend(back[static_cast<std::size_t>(i)]);
      engine->delete_last();
      query();
    }
  }
  out.ops = engine->stats().ops;
  out.stats = engine->stats();
  return out;
}

RunOutcome run_trie_dfs(const BenchSpec& spec) {
  std::mt19937_64 rng(spec.seed + 3);
  std::vector<std::string> strings;
  std::int64_t letters = 0;
  while (letters < spec.n) {
    std::size_t len = 8 + rng() % 57;
    std::string s(len, 'A');
    for (char& c : s) c = static_cast<char>('A' + rng() % 4);
    letters += static_cast<std::int64_t>(len);
    strings.push_back(std::move(s));
  }
  Trie trie = Trie::from_strings(strings);
  int ell = spec.w + spec.k - 1;
  RunOutcome out;
  EngineStats stats;
  std::vector<int> result =
      trie_path_minimizers(trie, ell, spec.k, spec.engine, spec.mode, spec.seed, spec.scheme,
                           &stats);
  for (int v : result)
    if (v >= 0) out.checksum = out.checksum * 31 + static_cast<std::uint64_t>(v);
  out.ops = stats.ops;
  out.stats = stats;
  return out;
}

}  // namespace

BenchRow run_bench(const BenchSpec& spec) {
  if (spec.reps < 1) throw std::invalid_argument("reps must be positive");
  auto once = [&]() -> std::pair<RunOutcome, std::uint64_t> {
    auto t0 = std::chrono::steady_clock::now();
    RunOutcome out;
    if (spec.scenario == "one-way-slide") out = run_slide(spec, false);
    else if (spec.scenario == "oscillating-window") out = run_slide(spec, true);
    else if (spec.scenario == "trie-dfs") out = run_trie_dfs(spec);
    else throw std::invalid_argument("unknown scenario " + spec.scenario);
    auto t1 = std::chrono::steady_clock::now();
    return {std::move(out),
            static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count())};
  };

  once();  // warmup, untimed
  std::vector<std::uint64_t> times;
  RunOutcome last;
  for (int r = 0; r < spec.reps; ++r) {
    auto [out, ns] = once();
    times.push_back(ns);
    last = std::move(out);
  }
  std::uint64_t total = std::accumulate(times.begin(), times.end(), std::uint64_t{0});
  std::uint64_t mean = total / times.size();
  std::uint64_t best = *std::min_element(times.begin(), times.end());

  BenchRow row;
  row.engine = engine_name(spec.engine);
  row.n = spec.n;
  row.w = spec.w;
  row.k = spec.k;
  row.seed = spec.seed;
  row.total_ops = last.ops;
  row.elapsed_ns = mean;
  row.ns_per_op = last.ops == 0 ? 0.0 : static_cast<double>(mean) / static_cast<double>(last.ops);
  row.best_ns_per_op =
      last.ops == 0 ? 0.0 : static_cast<double>(best) / static_cast<double>(last.ops);
  row.max_live_pairs = last.stats.peak_live_pairs;
  row.rebuild_count = last.stats.rebuilds;
  row.scenario = spec.scenario;
  row.checksum = last.checksum;
  return row;
}

std::string bench_csv_header() {
  return "engine,n,w,k,seed,total_ops,elapsed_ns,ns_per_op,max_live_pairs,rebuild_count,scenario";
}

std::string bench_csv_row(const BenchRow& row) {
  std::ostringstream out;
  out << row.engine << ',' << row.n << ',' << row.w << ',' << row.k << ',' << row.seed << ','
      << row.total_ops << ',' << row.elapsed_ns << ',' << row.ns_per_op << ','
      << row.max_live_pairs << ',' << row.rebuild_count << ',' << row.scenario;
  return out.str();
}

}  // namespace sdmin
