#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <string_view>

#include "sdmin/hash.hpp"

namespace sdmin {

// How fragment values are ordered: by Karp-Rabin fingerprint residue (fast,
// collisions compare equal) or letterwise lexicographically (collision-free
// ground truth for tests).
enum class OrderMode : std::uint8_t { Krf, Lex };

inline std::string_view order_mode_name(OrderMode m) {
  return m == OrderMode::Krf ? "krf" : "lex";
}

inline std::optional<OrderMode> parse_order_mode(std::string_view s) {
  if (s == "krf") return OrderMode::Krf;
  if (s == "lex") return OrderMode::Lex;
  return std::nullopt;
}

// Read-only letter access shared by every text representation.  Lex-mode
// order values keep a pointer to this interface, so texts must stay at a
// fixed address for as long as values derived from them are alive; texts are
// therefore non-copyable and non-movable.
class TextBase {
 public:
  TextBase(const HashConfig& cfg, OrderMode mode) : cfg_(cfg), mode_(mode) {}
  TextBase(const TextBase&) = delete;
  TextBase& operator=(const TextBase&) = delete;
  virtual ~TextBase() = default;

  virtual Letter letter_at(Pos pos) const = 0;

  const HashConfig& config() const { return cfg_; }
  OrderMode order_mode() const { return mode_; }

 protected:
  HashConfig cfg_;
  OrderMode mode_;
};

// Value of one length-k fragment under the configured order.  Krf mode
// compares the fingerprint residue as an integer; Lex mode compares the
// fragment letters through the owning text (the handle stays valid while the
// fragment exists in its text).
struct OrderValue {
  OrderMode mode = OrderMode::Krf;
  std::uint64_t krf = 0;
  const TextBase* text = nullptr;  // Lex handle
  Pos pos = 0;                     // Lex handle
};

inline int order_compare(const OrderValue& a, const OrderValue& b) {
  assert(a.mode == b.mode);
  if (a.mode == OrderMode::Krf) {
    if (a.krf != b.krf) return a.krf < b.krf ? -1 : 1;
    return 0;
  }
  const int k = a.text->config().k;
  assert(b.text->config().k == k);
  for (int i = 0; i < k; ++i) {
    Letter x = a.text->letter_at(a.pos + i);
    Letter y = b.text->letter_at(b.pos + i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

// A fragment's starting position together with its value.  The total order
// used everywhere is (value, position): smaller value first, ties broken by
// the leftmost (smallest) position.
struct FragmentPair {
  Pos pos = 0;
  OrderValue value;
};

struct pair_less {
  bool operator()(const FragmentPair& a, const FragmentPair& b) const {
    int c = order_compare(a.value, b.value);
    if (c != 0) return c < 0;
    return a.pos < b.pos;
  }
};

inline bool pair_equal(const FragmentPair& a, const FragmentPair& b) {
  return a.pos == b.pos && order_compare(a.value, b.value) == 0;
}

// Fingerprint of the fragment starting at `pos`, recomputed from the letters
// (no rolling).  O(k).
template <class Text>
std::uint64_t fragment_krf(const Text& text, Pos pos) {
  const HashConfig& cfg = text.config();
  std::uint64_t h = 0;
  for (int i = 0; i < cfg.k; ++i) {
    Letter a = text.letter_at(pos + i);
    assert(a < cfg.modulus);
    h = mul_mod(h, cfg.base, cfg.modulus) + a;
    if (h >= cfg.modulus) h -= cfg.modulus;
  }
  return h;
}

}  // namespace sdmin
