#pragma once

#include <vector>

#include "sdmin/engine.hpp"
#include "sdmin/sdstring.hpp"

namespace sdmin {

// Two-stack engine: fragments are split at a pivot position into a left stack
// (fed by prepends, drained by delete_first) and a right stack (fed by
// appends, drained by delete_last).  Each stack keeps only pairs that can
// still become the minimizer on its side:
//   left stack,  bottom->top positions decreasing, push iff value <= top
//                (a tie is kept: the newcomer is leftmost and wins it);
//   right stack, bottom->top positions increasing, push iff value <  top
//                (a tie is dropped: the incumbent is leftmost and wins it).
// The side minimum is the stack top, the global minimizer is the smaller top.
//
// When a deletion targets a side whose stack is empty, the structure is
// rebuilt around a fresh pivot near the middle, re-inserting every fragment
// once in O(fragments) with O(1) extra space via rolling hashes.  The side
// being deleted from receives ceil(f/2) fragments: the in-flight deletion
// consumes one of them immediately, so both sides end up with at least
// floor((f-1)/2) fragments and two rebuilds are always separated by enough
// operations to pay for the second one — rebuild cost (in fragments) never
// exceeds the operation count since the previous rebuild.  That inequality is
// checked on every rebuild and recorded in stats().witness_violations.
class TwoStackEngine final : public MinimizerEngine {
 public:
  TwoStackEngine(const HashConfig& cfg, OrderMode mode, Pos start = 0)
      : text_(cfg, mode, start) {}

  std::optional<FragmentPair> prepend(Letter a) override {
    begin_op();
    auto created = text_.prepend(a);
    if (created) {
      if (!anchored_) {
        anchor(created->pos);
        push_right(*created);
      } else {
        assert(created->pos < pivot_ && "prepended fragment must land left of the pivot");
        push_left(*created);
      }
    }
    return done(created);
  }

  std::optional<FragmentPair> append(Letter a) override {
    begin_op();
    auto created = text_.append(a);
    if (created) {
      if (!anchored_) anchor(created->pos);
      assert(created->pos >= pivot_ && "appended fragment must land right of the pivot");
      push_right(*created);
    }
    return done(created);
  }

  std::optional<FragmentPair> delete_first() override {
    begin_op();
    if (anchored_ && text_.fragment_count() >= 2 && left_.empty())
      rebuild((text_.fragment_count() + 1) / 2);
    auto removed = text_.delete_first();
    if (removed && !left_.empty() && left_.back().pos == removed->pos) pop(left_);
    // A lone fragment may sit on the right stack (it was anchored there);
    // done() clears everything once the fragment count hits zero.
    return done(removed);
  }

  std::optional<FragmentPair> delete_last() override {
    begin_op();
    if (anchored_ && text_.fragment_count() >= 2 && right_.empty())
      rebuild(text_.fragment_count() / 2);
    auto removed = text_.delete_last();
    if (removed && !right_.empty() && right_.back().pos == removed->pos) pop(right_);
    return done(removed);
  }

  std::optional<FragmentPair> minimizer() const override {
    if (left_.empty() && right_.empty()) return std::nullopt;
    if (left_.empty()) return right_.back();
    if (right_.empty()) return left_.back();
    return pair_less{}(left_.back(), right_.back()) ? left_.back() : right_.back();
  }

  Pos start_pos() const override { return text_.start_pos(); }
  std::int64_t size() const override { return text_.size(); }
  std::int64_t fragment_count() const override { return text_.fragment_count(); }
  const EngineStats& stats() const override { return stats_; }
  EngineKind kind() const override { return EngineKind::TwoStack; }

  // Re-centers the stacks around the middle of the current string.  Exposed
  // for tests and diagnostics; maintenance calls it on demand.
  void rebuild_now() {
    if (text_.fragment_count() >= 1) rebuild(text_.fragment_count() / 2);
  }

  bool anchored() const { return anchored_; }
  Pos pivot() const { return pivot_; }
  const std::vector<FragmentPair>& left_stack() const { return left_; }
  const std::vector<FragmentPair>& right_stack() const { return right_; }
  const SemiDynamicString& text() const { return text_; }

 private:
  void begin_op() {
    ++stats_.ops;
    ++ops_since_rebuild_;
  }

  void anchor(Pos pos) {
    pivot_ = pos;
    anchored_ = true;
  }

  void push_left(const FragmentPair& p) {
    if (left_.empty() || order_compare(p.value, left_.back().value) <= 0) push(left_, p);
  }

  void push_right(const FragmentPair& p) {
    if (right_.empty() || order_compare(p.value, right_.back().value) < 0) push(right_, p);
  }

  void push(std::vector<FragmentPair>& stack, const FragmentPair& p) {
    stack.push_back(p);
    ++stats_.work;
    if (stack.size() > stats_.max_stack_depth) stats_.max_stack_depth = stack.size();
  }

  void pop(std::vector<FragmentPair>& stack) {
    stack.pop_back();
    ++stats_.work;
  }

  // left_share = number of fragments assigned to the left stack; the caller
  // biases it toward the side its own deletion is about to drain.
  void rebuild(std::int64_t left_share) {
    std::int64_t f = text_.fragment_count();
    assert(f >= 1 && left_share >= 0 && left_share <= f);
    if (static_cast<std::uint64_t>(f) > ops_since_rebuild_) ++stats_.witness_violations;
    ++stats_.rebuilds;
    stats_.rebuild_work += static_cast<std::uint64_t>(f);
    ops_since_rebuild_ = 0;
    left_.clear();
    right_.clear();
    Pos start = text_.start_pos();
    anchor(start + left_share);
    int k = text_.config().k;
    if (pivot_ > start) {
      std::uint64_t krf = fragment_krf(text_, pivot_ - 1);
      for (Pos p = pivot_ - 1;;) {
        push_left(FragmentPair{p, text_.make_order_value(p, krf)});
        ++stats_.work;
        if (p == start) break;
        krf = roll_left(krf, text_.letter_at(p - 1), text_.letter_at(p + k - 1), text_.config());
        --p;
      }
    }
    {
      std::uint64_t krf = fragment_krf(text_, pivot_);
      for (Pos p = pivot_;;) {
        push_right(FragmentPair{p, text_.make_order_value(p, krf)});
        ++stats_.work;
        if (++p == start + f) break;
        krf = roll_right(krf, text_.letter_at(p - 1), text_.letter_at(p - 1 + k), text_.config());
      }
    }
    stats_.live_pairs = left_.size() + right_.size();
    if (stats_.live_pairs > stats_.peak_live_pairs) stats_.peak_live_pairs = stats_.live_pairs;
  }

  std::optional<FragmentPair> done(std::optional<FragmentPair> r) {
    if (text_.fragment_count() == 0) {
      left_.clear();
      right_.clear();
      anchored_ = false;
    }
    stats_.live_pairs = left_.size() + right_.size();
    if (stats_.live_pairs > stats_.peak_live_pairs) stats_.peak_live_pairs = stats_.live_pairs;
    assert((stats_.live_pairs == 0) == (text_.fragment_count() == 0));
    return r;
  }

  SemiDynamicString text_;
  std::vector<FragmentPair> left_;
  std::vector<FragmentPair> right_;
  Pos pivot_ = 0;
  bool anchored_ = false;
  std::uint64_t ops_since_rebuild_ = 0;
  EngineStats stats_;
};

}  // namespace sdmin
