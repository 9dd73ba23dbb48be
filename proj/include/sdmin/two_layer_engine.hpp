#pragma once

#include <utility>
#include <vector>

#include "sdmin/block_scheme.hpp"
#include "sdmin/engine.hpp"
#include "sdmin/sdstring.hpp"

namespace sdmin {

// Two-layer engine: like the two-stack engine it splits fragments at an
// anchor, but each side is further cut into blocks (see BlockScheme) so that
// only O(sqrt(length)) pairs are stored at any time under the progressing
// scheme, or O(c + length/c) under Fixed(c).
//
// Per side the structure keeps
//   * at most two first-layer "border" stacks for the outermost blocks, each
//     holding the block's surviving pairs under the side's stack discipline
//     (left side keeps ties, right side drops them, as in TwoStackEngine);
//   * one second-layer stack holding, innermost first, one representative
//     (the block minimum) for each flushed inner block, thinned by the same
//     discipline.
// When growth starts a third border block the innermost border stack is
// flushed: its top joins the second layer (unless dominated) and the rest is
// discarded.  When shrinking consumes a block whose stack was flushed, the
// block is recomputed from the text by one rolling-hash scan, and the
// second-layer entry it subsumed (if any) is popped.  Keeping two border
// stacks makes back-and-forth movement across one block boundary free, and
// the recompute of a block is always separated from the previous flush or
// recompute on that side by at least a block span of operations.  That
// pay-as-you-go inequality is checked for every flush and recompute — the
// first one after a full rebuild is charged to the rebuild itself — and
// failures are recorded in stats().witness_violations.
//
// A deletion aimed at a side with no fragments re-centers the anchor with a
// full rebuild, exactly as in TwoStackEngine and under the same witness.
//
// The text type is a template parameter so the same maintenance logic runs
// over an owned string (SemiDynamicString) or a borrowed read-only window
// (TextWindow), which is what makes the sublinear-space scanner possible.
template <class Text = SemiDynamicString>
class TwoLayerEngineT final : public MinimizerEngine {
 public:
  struct BlockStack {
    std::int64_t block = 0;
    std::vector<FragmentPair> entries;  // bottom -> top
  };

  template <class... Args>
  explicit TwoLayerEngineT(const BlockScheme& scheme, Args&&... args)
      : text_(std::forward<Args>(args)...), scheme_(scheme) {}

  std::optional<FragmentPair> prepend(Letter a) override {
    begin_op(left_);
    auto created = text_.prepend(a);
    if (created) on_created(*created, /*via_prepend=*/true);
    return done(created);
  }

  std::optional<FragmentPair> append(Letter a) override {
    begin_op(right_);
    auto created = text_.append(a);
    if (created) on_created(*created, /*via_prepend=*/false);
    return done(created);
  }

  std::optional<FragmentPair> delete_first() override {
    begin_op(left_);
    std::int64_t f = text_.fragment_count();
    if (f >= 1 && left_.count == 0) {
      if (f == 1) clear_all();
      else full_rebuild((f + 1) / 2);
    }
    prepare_outer(left_, /*left=*/true);
    auto removed = text_.delete_first();
    if (removed && anchored_) remove_outer(left_, *removed, /*left=*/true);
    return done(removed);
  }

  std::optional<FragmentPair> delete_last() override {
    begin_op(right_);
    std::int64_t f = text_.fragment_count();
    if (f >= 1 && right_.count == 0) {
      if (f == 1) clear_all();
      else full_rebuild(f / 2);
    }
    prepare_outer(right_, /*left=*/false);
    auto removed = text_.delete_last();
    if (removed && anchored_) remove_outer(right_, *removed, /*left=*/false);
    return done(removed);
  }

  std::optional<FragmentPair> minimizer() const override {
    std::optional<FragmentPair> best;
    auto offer = [&best](const FragmentPair& p) {
      if (!best || pair_less{}(p, *best)) best = p;
    };
    for (const Side* side : {&left_, &right_}) {
      for (const BlockStack& bs : side->border)
        if (!bs.entries.empty()) offer(bs.entries.back());
      if (!side->internal.empty()) offer(side->internal.back());
    }
    return best;
  }

  Pos start_pos() const override { return text_.start_pos(); }
  std::int64_t size() const override { return text_.size(); }
  std::int64_t fragment_count() const override { return text_.fragment_count(); }
  const EngineStats& stats() const override { return stats_; }
  EngineKind kind() const override { return EngineKind::TwoLayer; }

  // Rebuilds around an explicit anchor.  Exposed for tests and diagnostics;
  // maintenance re-centers automatically.
  void rebuild_at(Pos anchor) {
    std::int64_t f = text_.fragment_count();
    assert(f >= 1 && anchor >= text_.start_pos() && anchor <= text_.start_pos() + f);
    (void)f;
    rebuild(anchor);
  }

  const BlockScheme& scheme() const { return scheme_; }
  bool anchored() const { return anchored_; }
  Pos anchor() const { return anchor_; }
  const std::vector<BlockStack>& left_border() const { return left_.border; }
  const std::vector<BlockStack>& right_border() const { return right_.border; }
  const std::vector<FragmentPair>& left_internal() const { return left_.internal; }
  const std::vector<FragmentPair>& right_internal() const { return right_.internal; }
  std::int64_t left_count() const { return left_.count; }
  std::int64_t right_count() const { return right_.count; }
  const Text& text() const { return text_; }

 private:
  struct Side {
    std::vector<BlockStack> border;      // size <= 2, back = outermost
    std::vector<FragmentPair> internal;  // bottom = innermost block representative
    std::int64_t count = 0;              // live fragments on this side
    std::uint64_t ops_since_event = 0;
    bool grace = false;
  };

  void begin_op(Side& side) {
    ++stats_.ops;
    ++ops_since_rebuild_;
    ++side.ops_since_event;
  }

  void on_created(const FragmentPair& p, bool via_prepend) {
    if (!anchored_) {
      // Lazy anchoring: the first fragment fixes the anchor at its own
      // position, which puts it into block 0 on the right.
      anchored_ = true;
      anchor_ = p.pos;
      left_.grace = right_.grace = true;
      left_.ops_since_event = right_.ops_since_event = 0;
      right_.border.push_back(BlockStack{0, {}});
      push_block(right_.border.back(), p, /*left=*/false);
      right_.count = 1;
      return;
    }
    bool left = p.pos < anchor_;
    assert(left == via_prepend && "new fragments extend their own side of the anchor");
    (void)via_prepend;
    Side& side = left ? left_ : right_;
    std::int64_t b = scheme_.block_of(p.pos, anchor_);
    if (side.border.empty() || side.border.back().block != b) {
      assert(side.border.empty() ||
             side.border.back().block + (left ? -1 : 1) == b);
      if (side.border.size() == 2) flush_inner_border(side, left);
      side.border.push_back(BlockStack{b, {}});
    }
    push_block(side.border.back(), p, left);
    ++side.count;
  }

  // The next deletion will consume this side's outermost fragment.  If the
  // block holding it has no border stack (it was flushed earlier), recompute
  // it now, while every letter of the block is still in the text.
  void prepare_outer(Side& side, bool left) {
    if (side.count == 0 || !side.border.empty()) return;
    Pos outer = left ? text_.start_pos() : text_.start_pos() + text_.fragment_count() - 1;
    recompute_block(side, scheme_.block_of(outer, anchor_), left);
  }

  void remove_outer(Side& side, const FragmentPair& removed, bool left) {
    assert(side.count >= 1);
    std::int64_t b = scheme_.block_of(removed.pos, anchor_);
    assert(!side.border.empty() && "prepare_outer restores the block before the deletion");
    BlockStack& outer = side.border.back();
    assert(outer.block == b && "deletions always target the outermost block");
    if (!outer.entries.empty() && outer.entries.back().pos == removed.pos) {
      outer.entries.pop_back();
      ++stats_.work;
      --live_;
    }
    --side.count;
    Pos boundary = left ? scheme_.block_hi(b, anchor_) : scheme_.block_lo(b, anchor_);
    if (removed.pos == boundary) {
      assert(outer.entries.empty() && "a drained block has no surviving pairs");
      side.border.pop_back();
    }
  }

  // Growth reached a third border block: retire the innermost of the two
  // existing ones, promoting its minimum to the second layer.
  void flush_inner_border(Side& side, bool left) {
    BlockStack victim = std::move(side.border.front());
    side.border.erase(side.border.begin());
    charge_event(side, scheme_.span(victim.block));
    ++stats_.flushes;
    assert(!victim.entries.empty());
    live_ -= victim.entries.size();
    stats_.work += victim.entries.size();
    push_internal(side, victim.entries.back(), left);
  }

  // A deletion needs a block whose stack was flushed: rebuild it from the
  // text with one rolling scan.  The block is always fully live here — the
  // deletion that triggers the recompute targets the block's outer end.
  void recompute_block(Side& side, std::int64_t b, bool left) {
    charge_event(side, scheme_.span(b));
    ++stats_.recomputes;
    Pos lo = scheme_.block_lo(b, anchor_);
    Pos hi = scheme_.block_hi(b, anchor_);
    stats_.work += static_cast<std::uint64_t>(hi - lo + 1);
    int k = text_.config().k;
    BlockStack bs{b, {}};
    if (left) {
      std::uint64_t krf = fragment_krf(text_, hi);
      for (Pos p = hi;;) {
        push_block(bs, FragmentPair{p, text_.make_order_value(p, krf)}, left);
        if (p == lo) break;
        krf = roll_left(krf, text_.letter_at(p - 1), text_.letter_at(p + k - 1), text_.config());
        --p;
      }
    } else {
      std::uint64_t krf = fragment_krf(text_, lo);
      for (Pos p = lo;;) {
        push_block(bs, FragmentPair{p, text_.make_order_value(p, krf)}, left);
        if (p == hi) break;
        krf = roll_right(krf, text_.letter_at(p), text_.letter_at(p + k), text_.config());
        ++p;
      }
    }
    side.border.push_back(std::move(bs));
    if (!side.internal.empty() && scheme_.block_of(side.internal.back().pos, anchor_) == b) {
      side.internal.pop_back();
      ++stats_.work;
      --live_;
    }
  }

  void charge_event(Side& side, std::int64_t cost) {
    if (side.grace) {
      side.grace = false;  // first event after a rebuild is paid by the rebuild
    } else if (static_cast<std::uint64_t>(cost) > side.ops_since_event) {
      ++stats_.witness_violations;
    }
    side.ops_since_event = 0;
  }

  // left_share = number of fragments assigned to the left side; the caller
  // biases it toward the side its own deletion is about to drain, so both
  // sides keep at least floor((f-1)/2) fragments once the deletion lands.
  void full_rebuild(std::int64_t left_share) {
    std::int64_t f = text_.fragment_count();
    if (static_cast<std::uint64_t>(f) > ops_since_rebuild_) ++stats_.witness_violations;
    rebuild(text_.start_pos() + left_share);
  }

  void rebuild(Pos anchor) {
    std::int64_t f = text_.fragment_count();
    assert(f >= 1);
    ++stats_.rebuilds;
    stats_.rebuild_work += static_cast<std::uint64_t>(f);
    stats_.work += static_cast<std::uint64_t>(f);
    ops_since_rebuild_ = 0;
    clear_sides();
    anchored_ = true;
    anchor_ = anchor;
    left_.grace = right_.grace = true;
    rebuild_side(left_, /*left=*/true, f);
    rebuild_side(right_, /*left=*/false, f);
    stats_.live_pairs = live_;
  }

  // Streams one side outward from the anchor, flushing each block as the
  // next one starts; the final (outermost, possibly partial) block stays as
  // the single border stack.
  void rebuild_side(Side& side, bool left, std::int64_t f) {
    Pos start = text_.start_pos();
    Pos from = left ? anchor_ - 1 : anchor_;
    Pos to = left ? start : start + f - 1;
    if (left ? from < to : from > to) return;
    side.count = left ? from - to + 1 : to - from + 1;
    int k = text_.config().k;
    std::uint64_t krf = fragment_krf(text_, from);
    BlockStack cur{scheme_.block_of(from, anchor_), {}};
    for (Pos p = from;;) {
      std::int64_t b = scheme_.block_of(p, anchor_);
      if (b != cur.block) {
        assert(!cur.entries.empty());
        push_internal(side, cur.entries.back(), left);
        live_ -= cur.entries.size();
        cur = BlockStack{b, {}};
      }
      push_block(cur, FragmentPair{p, text_.make_order_value(p, krf)}, left);
      if (p == to) break;
      if (left) {
        krf = roll_left(krf, text_.letter_at(p - 1), text_.letter_at(p + k - 1), text_.config());
        --p;
      } else {
        krf = roll_right(krf, text_.letter_at(p), text_.letter_at(p + k), text_.config());
        ++p;
      }
    }
    side.border.push_back(std::move(cur));
  }

  void push_block(BlockStack& bs, const FragmentPair& p, bool left) {
    bool kept = bs.entries.empty() ||
                (left ? order_compare(p.value, bs.entries.back().value) <= 0
                      : order_compare(p.value, bs.entries.back().value) < 0);
    if (!kept) return;
    bs.entries.push_back(p);
    ++stats_.work;
    ++live_;
    if (live_ > stats_.peak_live_pairs) stats_.peak_live_pairs = live_;
    if (bs.entries.size() > stats_.max_stack_depth) stats_.max_stack_depth = bs.entries.size();
  }

  void push_internal(Side& side, const FragmentPair& rep, bool left) {
    bool kept = side.internal.empty() ||
                (left ? order_compare(rep.value, side.internal.back().value) <= 0
                      : order_compare(rep.value, side.internal.back().value) < 0);
    if (!kept) return;
    side.internal.push_back(rep);
    ++stats_.work;
    ++live_;
    if (live_ > stats_.peak_live_pairs) stats_.peak_live_pairs = live_;
    if (side.internal.size() > stats_.max_stack_depth) stats_.max_stack_depth = side.internal.size();
  }

  void clear_sides() {
    for (Side* side : {&left_, &right_}) {
      side->border.clear();
      side->internal.clear();
      side->count = 0;
      side->ops_since_event = 0;
      side->grace = false;
    }
    live_ = 0;
  }

  void clear_all() {
    clear_sides();
    anchored_ = false;
  }

  std::optional<FragmentPair> done(std::optional<FragmentPair> r) {
    if (text_.fragment_count() == 0 && anchored_) clear_all();
    assert(left_.count + right_.count == text_.fragment_count());
    stats_.live_pairs = live_;
    return r;
  }

  Text text_;
  BlockScheme scheme_;
  Pos anchor_ = 0;
  bool anchored_ = false;
  Side left_;
  Side right_;
  std::uint64_t live_ = 0;
  std::uint64_t ops_since_rebuild_ = 0;
  EngineStats stats_;
};

using TwoLayerEngine = TwoLayerEngineT<SemiDynamicString>;

}  // namespace sdmin
