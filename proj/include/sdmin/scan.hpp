#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdmin/block_scheme.hpp"
#include "sdmin/engine.hpp"

namespace sdmin {

// Positions of the minimizers of every length-(w+k-1) window of `s` (windows
// of w fragment starts), as a sorted, duplicate-free list of fragment start
// indices into `s`.  Runs one engine across the string: prime the first
// window, then slide with one append and one delete_first per step.
std::vector<Pos> minimizer_set(std::span<const Letter> s, int w, int k, EngineKind kind,
                               OrderMode mode, std::uint64_t seed,
                               const BlockScheme& scheme = BlockScheme::progressing());

// Same result computed with a two-layer engine over a borrowed read-only
// window of `s`, so the scan stores O(sqrt(w)) fragment pairs instead of
// copying window letters.  `peak_pairs`, if given, receives the largest
// number of pairs held at once.
std::vector<Pos> minimizer_set_space_efficient(std::span<const Letter> s, int w, int k,
                                               OrderMode mode, std::uint64_t seed,
                                               std::uint64_t* peak_pairs = nullptr);

// Independent reference: scans every fragment of every window from scratch.
std::vector<Pos> minimizer_set_brute(std::span<const Letter> s, int w, int k, OrderMode mode,
                                     std::uint64_t seed);

}  // namespace sdmin
