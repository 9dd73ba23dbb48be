#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdmin/bench.hpp"
#include "sdmin/engine_factory.hpp"
#include "sdmin/fasta.hpp"
#include "sdmin/scan.hpp"
#include "sdmin/trie.hpp"
#include "sdmin/verify.hpp"

namespace {

struct CommonOptions {
  std::string engine = "two-stack";
  std::string order = "krf";
  std::string block_scheme = "progressing";
  std::uint64_t seed = 0;
  bool verbose = false;
};

sdmin::EngineKind engine_kind(const CommonOptions& c) { return *sdmin::parse_engine(c.engine); }
sdmin::OrderMode order_mode(const CommonOptions& c) { return *sdmin::parse_order_mode(c.order); }
sdmin::BlockScheme block_scheme(const CommonOptions& c) {
  return *sdmin::BlockScheme::parse(c.block_scheme);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw sdmin::io_error("cannot write " + path);
  return file;
}

void add_common(CLI::App* cmd, CommonOptions& c, bool with_engine = true) {
  if (with_engine)
    cmd->add_option("--engine", c.engine, "maintenance engine")
        ->check(CLI::IsMember({"oracle", "heap", "deque", "two-stack", "two-layer"}))
        ->capture_default_str();
  cmd->add_option("--order", c.order, "fragment order: krf (seeded fingerprints) or lex")
      ->check(CLI::IsMember({"krf", "lex"}))
      ->capture_default_str();
  cmd->add_option("--block-scheme", c.block_scheme,
                  "two-layer block scheme: progressing or fixed:<len>")
      ->check([](const std::string& v) {
        return sdmin::BlockScheme::parse(v) ? std::string{}
                                            : std::string{"expected progressing or fixed:<len>"};
      })
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for the fingerprint order")->capture_default_str();
  cmd->add_flag("--verbose", c.verbose, "extra progress information on stderr");
}

int cmd_minimize(const std::string& input, int w, int k, bool space_efficient,
                 const std::string& out_path, const CommonOptions& c) {
  sdmin::InputData data = sdmin::read_input(input);
  std::size_t window_letters = static_cast<std::size_t>(w) + static_cast<std::size_t>(k) - 1;

  std::vector<std::vector<sdmin::Pos>> results(data.records.size());
  std::vector<char> skipped(data.records.size(), 0);
  bool parallel = data.fasta && data.records.size() > 1;
  (void)parallel;
  std::int64_t count = static_cast<std::int64_t>(data.records.size());
#ifdef SDMIN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    const std::string& seq = data.records[static_cast<std::size_t>(i)].seq;
    if (seq.size() < window_letters) {
      skipped[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    std::span<const sdmin::Letter> letters(
        reinterpret_cast<const sdmin::Letter*>(seq.data()), seq.size());
    results[static_cast<std::size_t>(i)] =
        space_efficient
            ? sdmin::minimizer_set_space_efficient(letters, w, k, order_mode(c), c.seed)
            : sdmin::minimizer_set(letters, w, k, engine_kind(c), order_mode(c), c.seed,
                                   block_scheme(c));
  }

  for (std::size_t i = 0; i < data.records.size(); ++i) {
    if (!skipped[i]) continue;
    std::cerr << "warning: record "
              << (data.records[i].name.empty() ? std::to_string(i) : data.records[i].name)
              << " is shorter than one window (" << window_letters << " letters); skipped\n";
  }

  std::ofstream file;
  std::ostream& out = open_out(out_path, file);
  if (data.records.size() > 1) {
    out << "record,pos\n";
    for (std::size_t i = 0; i < data.records.size(); ++i) {
      const std::string name =
          data.records[i].name.empty() ? std::to_string(i) : data.records[i].name;
      for (sdmin::Pos p : results[i]) out << name << ',' << p << '\n';
    }
  } else if (!data.records.empty()) {
    for (sdmin::Pos p : results[0]) out << p << '\n';
  }
  if (c.verbose)
    std::cerr << data.records.size() << " record(s) scanned with engine " << c.engine << "\n";
  return 0;
}

int cmd_trie(const std::string& input, int ell, int k, const std::string& out_path,
             const CommonOptions& c) {
  std::vector<std::string> strings;
  sdmin::InputData data = sdmin::read_input(input);
  if (data.fasta) {
    for (auto& r : data.records) strings.push_back(std::move(r.seq));
  } else {
    strings = sdmin::read_lines(input);
  }
  sdmin::Trie trie = sdmin::Trie::from_strings(strings);
  sdmin::EngineStats stats;
  std::vector<int> report = sdmin::trie_path_minimizers(
      trie, ell, k, engine_kind(c), order_mode(c), c.seed, block_scheme(c), &stats);

  std::vector<int> reported;
  for (int u = 0; u < trie.node_count(); ++u)
    if (report[static_cast<std::size_t>(u)] >= 0) reported.push_back(report[static_cast<std::size_t>(u)]);
  std::sort(reported.begin(), reported.end());
  reported.erase(std::unique(reported.begin(), reported.end()), reported.end());

  std::ofstream file;
  std::ostream& out = open_out(out_path, file);
  for (int u : reported) out << u << '\n';
  if (c.verbose) {
    // Window node with its minimizer offset (depth distance to the reported
    // ancestor), one pair per node of depth >= l.
    out << "node,offset\n";
    for (int u = 0; u < trie.node_count(); ++u)
      if (report[static_cast<std::size_t>(u)] >= 0)
        out << u << ',' << trie.depth(u) - trie.depth(report[static_cast<std::size_t>(u)]) << '\n';
  }
  if (c.verbose)
    std::cerr << "trie: " << trie.node_count() << " nodes, " << trie.edge_count() << " edges, "
              << "max depth " << trie.max_depth() << "; engine ops " << stats.ops << ", peak pairs "
              << stats.peak_live_pairs << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int sequences, int cases) {
  std::vector<sdmin::SuiteResult> results;
  if (suite == "all" || suite == "border") {
    sdmin::BorderSuiteOptions o;
    o.seed = seed + 1;
    if (sequences > 0) o.sequences = sequences;
    results.push_back(sdmin::run_border_suite(o));
  }
  if (suite == "all" || suite == "oscillation") {
    sdmin::OscillationSuiteOptions o;
    o.seed = seed + 2;
    results.push_back(sdmin::run_oscillation_suite(o));
  }
  if (suite == "all" || suite == "scan") {
    sdmin::ScanSuiteOptions o;
    o.seed = seed + 3;
    if (cases > 0) o.cases = cases;
    results.push_back(sdmin::run_scan_suite(o));
  }
  if (suite == "all" || suite == "trie") {
    sdmin::TrieSuiteOptions o;
    o.seed = seed + 4;
    if (cases > 0) o.cases = cases;
    results.push_back(sdmin::run_trie_suite(o));
  }
  if (suite == "all" || suite == "hash") {
    sdmin::HashSuiteOptions o;
    o.seed = seed + 5;
    if (cases > 0) o.cases = cases;
    results.push_back(sdmin::run_hash_suite(o));
  }
  bool failed = false;
  for (const sdmin::SuiteResult& r : results) {
    bool ok = r.ok() && r.witness_violations == 0;
    failed = failed || !ok;
    std::cout << "suite " << r.name << ": " << r.cases << " cases, " << r.ops << " ops, "
              << r.mismatches << " mismatches, " << r.witness_violations
              << " witness violations [" << (ok ? "ok" : "FAIL") << "]\n";
    if (!ok && !r.first_mismatch.empty())
      std::cout << "  reproducer: " << r.first_mismatch << "\n";
  }
  return failed ? 2 : 0;
}

int cmd_bench(const std::string& scenario, const std::string& engines, std::int64_t n, int w,
              int k, int reps, const std::string& out_path, const CommonOptions& c) {
  std::vector<sdmin::EngineKind> kinds;
  std::stringstream ss(engines);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto kind = sdmin::parse_engine(token);
    if (!kind) throw CLI::ValidationError("--engines", "unknown engine " + token);
    kinds.push_back(*kind);
  }

  std::ofstream file;
  std::ostream& out = open_out(out_path, file);
  out << sdmin::bench_csv_header() << '\n';
  for (sdmin::EngineKind kind : kinds) {
    sdmin::BenchSpec spec;
    spec.engine = kind;
    spec.scenario = scenario;
    spec.n = n;
    spec.w = w;
    spec.k = k;
    spec.seed = c.seed;
    spec.reps = reps;
    spec.mode = order_mode(c);
    spec.scheme = block_scheme(c);
    try {
      sdmin::BenchRow row = sdmin::run_bench(spec);
      out << sdmin::bench_csv_row(row) << '\n';
      if (c.verbose) std::cerr << sdmin::engine_name(kind) << ": " << row.ns_per_op << " ns/op\n";
    } catch (const sdmin::unsupported_operation& e) {
      std::cerr << "note: " << sdmin::engine_name(kind) << " skipped: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-dynamic minimizer toolkit"};
  app.require_subcommand(1);

  CommonOptions min_common;
  std::string min_input;
  std::string min_out;
  int min_w = 0;
  int min_k = 0;
  bool min_space_efficient = false;
  CLI::App* minimize = app.add_subcommand("minimize", "minimizer set of a text or FASTA file");
  minimize->add_option("input", min_input, "input file (FASTA if it starts with '>')")
      ->required();
  minimize->add_option("--w", min_w, "fragment starts per window (at least 2)")->required()
      ->check(CLI::Range(2, 1 << 30));
  minimize->add_option("--k", min_k, "fragment length")->required()->check(CLI::PositiveNumber);
  minimize->add_flag("--space-efficient", min_space_efficient,
                     "scan through a borrowed window with the two-layer engine");
  minimize->add_option("--out", min_out, "output file (default stdout)");
  add_common(minimize, min_common);

  CommonOptions trie_common;
  std::string trie_input;
  std::string trie_out;
  int trie_l = 0;
  int trie_k = 0;
  CLI::App* trie = app.add_subcommand("trie", "path minimizers of a trie of strings");
  trie->add_option("input", trie_input, "strings, one per line (or FASTA records)")->required();
  trie->add_option("--l", trie_l, "path window length in letters")->required()
      ->check(CLI::PositiveNumber);
  trie->add_option("--k", trie_k, "fragment length")->required()->check(CLI::PositiveNumber);
  trie->add_option("--out", trie_out, "output file (default stdout)");
  add_common(trie, trie_common);

  std::string verify_suite = "all";
  std::uint64_t verify_seed = 0;
  int verify_sequences = 0;
  int verify_cases = 0;
  CLI::App* verify = app.add_subcommand("verify", "cross-check engines against references");
  verify->add_option("--suite", verify_suite, "which suite to run")
      ->check(CLI::IsMember({"all", "border", "oscillation", "scan", "trie", "hash"}))
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "base seed for the suites")->capture_default_str();
  verify->add_option("--sequences", verify_sequences, "override border sequence count");
  verify->add_option("--cases", verify_cases, "override case count of the other suites");

  CommonOptions bench_common;
  std::string bench_scenario = "one-way-slide";
  std::string bench_engines = "oracle,heap,deque,two-stack,two-layer";
  std::string bench_out;
  std::int64_t bench_n = 1000000;
  int bench_w = 64;
  int bench_k = 8;
  int bench_reps = 3;
  CLI::App* bench = app.add_subcommand("bench", "time the engines on synthetic workloads");
  bench->add_option("--scenario", bench_scenario, "workload")
      ->check(CLI::IsMember({"one-way-slide", "oscillating-window", "trie-dfs"}))
      ->capture_default_str();
  bench->add_option("--engines", bench_engines, "comma-separated engines to run")
      ->capture_default_str();
  bench->add_option("--n", bench_n, "letters to scan")->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--w", bench_w, "fragment starts per window (at least 2)")
      ->check(CLI::Range(2, 1 << 30))
      ->capture_default_str();
  bench->add_option("--k", bench_k, "fragment length")->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--reps", bench_reps, "timed repetitions (mean kept)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--out", bench_out, "output CSV file (default stdout)");
  add_common(bench, bench_common, /*with_engine=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (minimize->parsed())
      return cmd_minimize(min_input, min_w, min_k, min_space_efficient, min_out, min_common);
    if (trie->parsed()) return cmd_trie(trie_input, trie_l, trie_k, trie_out, trie_common);
    if (verify->parsed())
      return cmd_verify(verify_suite, verify_seed, verify_sequences, verify_cases);
    if (bench->parsed())
      return cmd_bench(bench_scenario, bench_engines, bench_n, bench_w, bench_k, bench_reps,
                       bench_out, bench_common);
  } catch (const sdmin::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
