#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sdmin/block_scheme.hpp"
#include "sdmin/deque_engine.hpp"
#include "sdmin/engine.hpp"

namespace sdmin {

// Scenarios:
//   one-way-slide       window of w fragments slides once across n letters
//                       (append + delete_first per step);
//   oscillating-window  same slide, then the mirror slide back across fresh
//                       letters (prepend + delete_last); needs all four
//                       operations, so the monotonic queue is rejected;
//   trie-dfs            depth-first trie traversal over ~n total letters
//                       with an (w+k-1)-letter path window.
struct BenchSpec {
  EngineKind engine = EngineKind::TwoStack;
  std::string scenario = "one-way-slide";
  std::int64_t n = 1000000;
  int w = 64;
  int k = 8;
  std::uint64_t seed = 0;
  int reps = 3;
  OrderMode mode = OrderMode::Krf;
  BlockScheme scheme = BlockScheme::progressing();
};

struct BenchRow {
  std::string engine;
  std::int64_t n = 0;
  int w = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::uint64_t total_ops = 0;
  std::uint64_t elapsed_ns = 0;   // mean over reps
  double ns_per_op = 0.0;         // mean over reps
  double best_ns_per_op = 0.0;    // fastest rep; robust against scheduler noise
  std::uint64_t max_live_pairs = 0;
  std::uint64_t rebuild_count = 0;
  std::string scenario;
  std::uint64_t checksum = 0;  // fold of every queried minimizer position
};

// Runs `spec.reps` timed repetitions after one untimed warmup and keeps the
// mean elapsed time.  Throws unsupported_operation when the engine cannot
// run the scenario.
BenchRow run_bench(const BenchSpec& spec);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace sdmin
