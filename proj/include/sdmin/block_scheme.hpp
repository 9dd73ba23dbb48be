#pragma once

#include <cassert>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "sdmin/hash.hpp"

namespace sdmin {

inline std::uint64_t isqrt64(std::uint64_t v) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  if (s > 0xffffffffULL) s = 0xffffffffULL;  // sqrt(2^64-1), avoids s*s overflow
  while (s > 0 && s * s > v) --s;
  while (s < 0xffffffffULL && (s + 1) * (s + 1) <= v) ++s;
  return s;
}

// Partition of positions around an anchor into blocks, indexed so that block
// 0 starts at the anchor, positive indices extend right and negative indices
// extend left.
//
// Fixed(c):    every block spans c positions; block b covers
//              [anchor + b*c, anchor + (b+1)*c - 1].
// Progressing: spans grow linearly away from the anchor (1, 3, 5, ... on
//              each side), so positions up to distance d from the anchor fall
//              into O(sqrt(d)) blocks.  Block b >= 0 covers
//              [anchor + b^2, anchor + (b+1)^2 - 1]; block b <= -1 mirrors it
//              on the left with j = -1-b: [anchor - (j+1)^2, anchor - j^2 - 1].
struct BlockScheme {
  enum class Kind : std::uint8_t { Fixed, Progressing };

  Kind kind = Kind::Progressing;
  std::int64_t block_len = 0;  // Fixed only

  static BlockScheme fixed(std::int64_t c) {
    assert(c >= 2);
    return BlockScheme{Kind::Fixed, c};
  }

  static BlockScheme progressing() { return BlockScheme{Kind::Progressing, 0}; }

  std::int64_t block_of(Pos pos, Pos anchor) const {
    std::int64_t d = pos - anchor;
    if (kind == Kind::Fixed) {
      std::int64_t q = d / block_len;
      if (d % block_len != 0 && d < 0) --q;
      return q;
    }
    if (d >= 0) return static_cast<std::int64_t>(isqrt64(static_cast<std::uint64_t>(d)));
    std::int64_t j = static_cast<std::int64_t>(isqrt64(static_cast<std::uint64_t>(-d - 1)));
    return -1 - j;
  }

  Pos block_lo(std::int64_t b, Pos anchor) const {
    if (kind == Kind::Fixed) return anchor + b * block_len;
    if (b >= 0) return anchor + b * b;
    std::int64_t j = -1 - b;
    return anchor - (j + 1) * (j + 1);
  }

  Pos block_hi(std::int64_t b, Pos anchor) const {
    if (kind == Kind::Fixed) return anchor + (b + 1) * block_len - 1;
    if (b >= 0) return anchor + (b + 1) * (b + 1) - 1;
    std::int64_t j = -1 - b;
    return anchor - j * j - 1;
  }

  std::int64_t span(std::int64_t b) const {
    if (kind == Kind::Fixed) return block_len;
    std::int64_t j = b >= 0 ? b : -1 - b;
    return 2 * j + 1;
  }

  std::string name() const {
    if (kind == Kind::Fixed) return "fixed:" + std::to_string(block_len);
    return "progressing";
  }

  static std::optional<BlockScheme> parse(const std::string& text) {
    if (text == "progressing") return progressing();
    constexpr const char* prefix = "fixed:";
    if (text.rfind(prefix, 0) == 0) {
      errno = 0;
      char* end = nullptr;
      long long c = std::strtoll(text.c_str() + 6, &end, 10);
      if (errno == 0 && end && *end == '\0' && c >= 2) return fixed(c);
    }
    return std::nullopt;
  }
};

}  // namespace sdmin
