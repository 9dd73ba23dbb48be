#pragma once

#include <cstdint>
#include <string>

namespace sdmin {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t ops = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t witness_violations = 0;
  std::string first_mismatch;
  bool ok() const { return mismatches == 0; }
};

// Random border-operation sequences on every engine against the scanning
// reference, comparing the minimizer and the affected fragment after every
// operation.  The monotonic queue runs with the operation family its
// orientation supports; everything else sees all four operations.  Sequence
// lengths are mixed, with every hundredth case at max_ops; string length is
// steered toward soft_cap letters by biasing deletions beyond it.
struct BorderSuiteOptions {
  std::uint64_t seed = 1;
  int sequences = 1000;
  int max_ops = 10000;
  int soft_cap = 128;
};
SuiteResult run_border_suite(const BorderSuiteOptions& options);

// Deterministic shrink/grow patterns (end-to-end drains, sweeps, and
// boundary oscillation) that stress the rebuild and recompute accounting of
// the stack-based engines; mismatches and witness violations both count.
struct OscillationSuiteOptions {
  std::uint64_t seed = 5;
};
SuiteResult run_oscillation_suite(const OscillationSuiteOptions& options);

// Whole-string minimizer sets from every engine (plus the fixed block scheme
// and the borrowed-window scanner) against the per-window brute force.
struct ScanSuiteOptions {
  std::uint64_t seed = 2;
  int cases = 200;
  int max_len = 4096;
};
SuiteResult run_scan_suite(const ScanSuiteOptions& options);

// Trie-path minimizers from the engines that support them against the
// materialize-and-scan reference.
struct TrieSuiteOptions {
  std::uint64_t seed = 3;
  int cases = 100;
};
SuiteResult run_trie_suite(const TrieSuiteOptions& options);

// Rolling fingerprints against from-scratch fingerprints in both directions.
struct HashSuiteOptions {
  std::uint64_t seed = 4;
  int cases = 500;
  int max_len = 256;
  int max_k = 16;
};
SuiteResult run_hash_suite(const HashSuiteOptions& options);

}  // namespace sdmin
