#pragma once

// Stateless predictions of each engine's internal containers, recomputed from
// the text alone and compared entry by entry.  Quadratic in the live fragment
// count, so only suitable for the test suites' small strings.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sdmin/deque_engine.hpp"
#include "sdmin/two_layer_engine.hpp"
#include "sdmin/two_stack_engine.hpp"

namespace sdmin::testing {

template <class Text>
struct FragmentView {
  const Text& text;
  Pos lo, hi;  // live fragment positions [lo, hi)

  explicit FragmentView(const Text& t)
      : text(t), lo(t.start_pos()), hi(t.start_pos() + t.fragment_count()) {}

  OrderValue value(Pos p) const { return text.make_order_value(p, fragment_krf(text, p)); }
  bool less(Pos a, Pos b) const { return order_compare(value(a), value(b)) < 0; }
};

inline std::string positions_of(const std::vector<FragmentPair>& v) {
  std::ostringstream out;
  for (const FragmentPair& p : v) out << ' ' << p.pos;
  return out.str();
}

template <class Text>
std::string compare_stack(const FragmentView<Text>& view, const char* label,
                          const std::vector<FragmentPair>& got, const std::vector<Pos>& expected) {
  std::ostringstream out;
  if (got.size() != expected.size()) {
    out << label << " holds " << got.size() << " entries, expected " << expected.size() << " (got"
        << positions_of(got) << ")";
    return out.str();
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i].pos != expected[i]) {
      out << label << " entry " << i << " at position " << got[i].pos << ", expected "
          << expected[i];
      return out.str();
    }
    if (order_compare(got[i].value, view.value(got[i].pos)) != 0) {
      out << label << " entry " << i << " carries a stale value for position " << got[i].pos;
      return out.str();
    }
  }
  return {};
}

// The one-directional monotonic queue.  Left-to-right: a pair survives iff no
// later live fragment is strictly smaller.  Right-to-left: a pair survives iff
// every earlier live fragment is strictly larger.
inline std::string validate_deque(const DequeEngine& e) {
  FragmentView view(e.text());
  std::vector<Pos> expected;
  for (Pos p = view.lo; p < view.hi; ++p) {
    bool kept = true;
    if (e.orientation() == DequeOrientation::LeftToRight) {
      for (Pos q = p + 1; q < view.hi && kept; ++q)
        if (view.less(q, p)) kept = false;
    } else {
      for (Pos q = view.lo; q < p && kept; ++q)
        if (!view.less(p, q)) kept = false;
    }
    if (kept) expected.push_back(p);
  }
  std::vector<FragmentPair> got(e.queue().begin(), e.queue().end());
  return compare_stack(view, "queue", got, expected);
}

// The pivot-split pair of stacks.  Left of the pivot a pair survives iff
// nothing strictly smaller sits between it and the pivot; right of the pivot
// iff nothing smaller-or-equal sits between the pivot and it.
inline std::string validate_two_stack(const TwoStackEngine& e) {
  FragmentView view(e.text());
  if (!e.anchored()) {
    if (view.hi != view.lo) return "engine not anchored while fragments are live";
    if (!e.left_stack().empty() || !e.right_stack().empty())
      return "stale stack entries on an empty engine";
    return {};
  }
  Pos x = e.pivot();
  if (x < view.lo || x > view.hi) return "pivot outside the live range";
  std::vector<Pos> left, right;
  for (Pos p = x - 1; p >= view.lo; --p) {
    bool kept = true;
    for (Pos q = p + 1; q < x && kept; ++q)
      if (view.less(q, p)) kept = false;
    if (kept) left.push_back(p);
  }
  for (Pos p = x; p < view.hi; ++p) {
    bool kept = true;
    for (Pos q = x; q < p && kept; ++q)
      if (!view.less(p, q)) kept = false;
    if (kept) right.push_back(p);
  }
  std::string err = compare_stack(view, "left stack", e.left_stack(), left);
  if (err.empty()) err = compare_stack(view, "right stack", e.right_stack(), right);
  if (err.empty() && e.stats().live_pairs != e.left_stack().size() + e.right_stack().size())
    err = "live_pairs does not match the stack sizes";
  return err;
}

// The blocked structure: border stacks follow the two-stack rules within
// their block, the second layer holds one representative per fully interior
// block, pushed innermost-first under the same domination rules.
template <class Text>
std::string validate_two_layer(const TwoLayerEngineT<Text>& e) {
  FragmentView view(e.text());
  if (!e.anchored()) {
    if (view.hi != view.lo) return "engine not anchored while fragments are live";
    if (!e.left_border().empty() || !e.right_border().empty() || !e.left_internal().empty() ||
        !e.right_internal().empty() || e.left_count() != 0 || e.right_count() != 0)
      return "stale containers on an empty engine";
    return {};
  }
  Pos x = e.anchor();
  if (x < view.lo || x > view.hi) return "anchor outside the live range";
  if (e.left_count() != x - view.lo) return "left fragment count is off";
  if (e.right_count() != view.hi - x) return "right fragment count is off";
  const BlockScheme& scheme = e.scheme();

  std::uint64_t total_entries = 0;
  auto side_check = [&](bool left_side) -> std::string {
    Pos lo = left_side ? view.lo : x;
    Pos hi = left_side ? x : view.hi;  // live side range [lo, hi)
    const std::vector<typename TwoLayerEngineT<Text>::BlockStack>& border =
        left_side ? e.left_border() : e.right_border();
    const std::vector<FragmentPair>& internal =
        left_side ? e.left_internal() : e.right_internal();
    const char* side_name = left_side ? "left" : "right";
    if (border.size() > 2)
      return std::string(side_name) + " side holds more than two border stacks";
    if (lo == hi) {
      if (!border.empty() || !internal.empty())
        return std::string(side_name) + " side not empty despite zero fragments";
      return {};
    }

    auto kept_of_block = [&](std::int64_t b) {
      Pos blo = std::max(scheme.block_lo(b, x), lo);
      Pos bhi = std::min(scheme.block_hi(b, x), hi - 1);
      std::vector<Pos> kept;
      if (left_side) {
        for (Pos p = bhi; p >= blo; --p) {
          bool ok = true;
          for (Pos q = p + 1; q <= bhi && ok; ++q)
            if (view.less(q, p)) ok = false;
          if (ok) kept.push_back(p);
        }
      } else {
        for (Pos p = blo; p <= bhi; ++p) {
          bool ok = true;
          for (Pos q = blo; q < p && ok; ++q)
            if (!view.less(p, q)) ok = false;
          if (ok) kept.push_back(p);
        }
      }
      return kept;
    };

    std::set<std::int64_t> border_blocks;
    for (const auto& bs : border) {
      if (bs.entries.empty()) return std::string(side_name) + " side holds an empty border stack";
      std::string err = compare_stack(view, (std::string(side_name) + " border block ").c_str(),
                                      bs.entries, kept_of_block(bs.block));
      if (!err.empty()) return err + " (block " + std::to_string(bs.block) + ")";
      border_blocks.insert(bs.block);
      total_entries += bs.entries.size();
    }
    if (border.size() == 2) {
      bool outer_last = left_side ? border[1].block < border[0].block
                                  : border[1].block > border[0].block;
      if (!outer_last)
        return std::string(side_name) + " border stacks are not ordered inner to outer";
    }
    if (!border.empty()) {
      Pos outermost = left_side ? lo : hi - 1;
      if (border.back().block != scheme.block_of(outermost, x))
        return std::string(side_name) + " outer border stack does not cover the outermost fragment";
    }

    // Distinct fragment-bearing blocks, innermost first.
    std::vector<std::int64_t> blocks;
    if (left_side) {
      for (Pos p = hi - 1; p >= lo; --p) {
        std::int64_t b = scheme.block_of(p, x);
        if (blocks.empty() || blocks.back() != b) blocks.push_back(b);
      }
    } else {
      for (Pos p = lo; p < hi; ++p) {
        std::int64_t b = scheme.block_of(p, x);
        if (blocks.empty() || blocks.back() != b) blocks.push_back(b);
      }
    }
    std::vector<FragmentPair> expected_internal;
    for (std::int64_t b : blocks) {
      if (border_blocks.count(b)) continue;
      if (scheme.block_lo(b, x) < lo || scheme.block_hi(b, x) >= hi)
        return std::string(side_name) + " interior block " + std::to_string(b) +
               " is not fully live";
      FragmentPair rep{scheme.block_lo(b, x), view.value(scheme.block_lo(b, x))};
      for (Pos p = scheme.block_lo(b, x) + 1; p <= scheme.block_hi(b, x); ++p) {
        FragmentPair cand{p, view.value(p)};
        if (pair_less{}(cand, rep)) rep = cand;
      }
      if (expected_internal.empty()) {
        expected_internal.push_back(rep);
      } else {
        int c = order_compare(rep.value, expected_internal.back().value);
        if (left_side ? c <= 0 : c < 0) expected_internal.push_back(rep);
      }
    }
    std::vector<Pos> expected_pos;
    for (const FragmentPair& p : expected_internal) expected_pos.push_back(p.pos);
    std::string err = compare_stack(view, (std::string(side_name) + " internal stack").c_str(),
                                    internal, expected_pos);
    total_entries += internal.size();
    return err;
  };

  std::string err = side_check(true);
  if (err.empty()) err = side_check(false);
  if (err.empty() && e.stats().live_pairs != total_entries)
    err = "live_pairs does not match the container sizes";
  return err;
}

}  // namespace sdmin::testing
