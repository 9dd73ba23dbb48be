#pragma once

#include <deque>

#include "sdmin/engine.hpp"
#include "sdmin/sdstring.hpp"

namespace sdmin {

// Which end of the string the monotonic queue allows deletions at.
// LeftToRight supports prepend/append/delete_first (a window sliding right);
// RightToLeft supports prepend/append/delete_last (a window sliding left).
enum class DequeOrientation : std::uint8_t { LeftToRight, RightToLeft };

inline const char* orientation_name(DequeOrientation o) {
  return o == DequeOrientation::LeftToRight ? "left-to-right" : "right-to-left";
}

// Monotonic-queue engine.  Fragment pairs that can never again become the
// minimizer are discarded permanently, which is only sound when deletions
// happen at a single end; the unsupported deletion throws.  Every pair is
// pushed and popped at most once, so maintenance is O(1) amortized.
//
// LeftToRight queue invariant: positions increase and values are
// non-decreasing from front to back; the front is the minimizer.  A new back
// pair evicts strictly larger values (it outlives them and wins against them);
// equal values stay because the older pair is leftmost and wins ties while it
// lives.  A new front pair enters only if it is <= the current front,
// otherwise some longer-lived pair to its right is strictly smaller and the
// newcomer can never win.  RightToLeft mirrors all of this; there the back is
// the minimizer and inserted ties are resolved the opposite way.
class DequeEngine final : public MinimizerEngine {
 public:
  DequeEngine(const HashConfig& cfg, OrderMode mode,
              DequeOrientation orientation = DequeOrientation::LeftToRight, Pos start = 0)
      : text_(cfg, mode, start), orientation_(orientation) {}

  std::optional<FragmentPair> prepend(Letter a) override {
    auto created = text_.prepend(a);
    if (created) {
      if (orientation_ == DequeOrientation::LeftToRight) {
        if (queue_.empty() || order_compare(created->value, queue_.front().value) <= 0)
          push_front(*created);
      } else {
        while (!queue_.empty() && order_compare(queue_.front().value, created->value) >= 0)
          pop_front();
        push_front(*created);
      }
    }
    return done(created);
  }

  std::optional<FragmentPair> append(Letter a) override {
    auto created = text_.append(a);
    if (created) {
      if (orientation_ == DequeOrientation::LeftToRight) {
        while (!queue_.empty() && order_compare(queue_.back().value, created->value) > 0)
          pop_back();
        push_back(*created);
      } else {
        if (queue_.empty() || order_compare(created->value, queue_.back().value) < 0)
          push_back(*created);
      }
    }
    return done(created);
  }

  std::optional<FragmentPair> delete_first() override {
    if (orientation_ != DequeOrientation::LeftToRight)
      throw unsupported_operation("right-to-left monotonic queue cannot delete at the front");
    std::optional<FragmentPair> doomed;
    if (text_.fragment_count() >= 1) doomed = text_.front_fragment();
    if (doomed && !queue_.empty() && queue_.front().pos == doomed->pos) pop_front();
    auto removed = text_.delete_first();
    return done(removed);
  }

  std::optional<FragmentPair> delete_last() override {
    if (orientation_ != DequeOrientation::RightToLeft)
      throw unsupported_operation("left-to-right monotonic queue cannot delete at the back");
    std::optional<FragmentPair> doomed;
    if (text_.fragment_count() >= 1) doomed = text_.back_fragment();
    if (doomed && !queue_.empty() && queue_.back().pos == doomed->pos) pop_back();
    auto removed = text_.delete_last();
    return done(removed);
  }

  std::optional<FragmentPair> minimizer() const override {
    if (queue_.empty()) return std::nullopt;
    return orientation_ == DequeOrientation::LeftToRight ? queue_.front() : queue_.back();
  }

  Pos start_pos() const override { return text_.start_pos(); }
  std::int64_t size() const override { return text_.size(); }
  std::int64_t fragment_count() const override { return text_.fragment_count(); }
  const EngineStats& stats() const override { return stats_; }
  EngineKind kind() const override { return EngineKind::Deque; }

  DequeOrientation orientation() const { return orientation_; }
  const SemiDynamicString& text() const { return text_; }
  const std::deque<FragmentPair>& queue() const { return queue_; }

 private:
  void push_front(const FragmentPair& p) { queue_.push_front(p); ++pushes_; ++stats_.work; }
  void push_back(const FragmentPair& p) { queue_.push_back(p); ++pushes_; ++stats_.work; }
  void pop_front() { queue_.pop_front(); ++pops_; ++stats_.work; }
  void pop_back() { queue_.pop_back(); ++pops_; ++stats_.work; }

  std::optional<FragmentPair> done(std::optional<FragmentPair> r) {
    ++stats_.ops;
    // Pay-as-you-go witness: every pop was paid for by the push that stored
    // the pair, so pops can never outnumber pushes.
    if (pops_ > pushes_) ++stats_.witness_violations;
    stats_.live_pairs = queue_.size();
    if (stats_.live_pairs > stats_.peak_live_pairs) stats_.peak_live_pairs = stats_.live_pairs;
    if (queue_.size() > stats_.max_stack_depth) stats_.max_stack_depth = queue_.size();
    assert(queue_.empty() == (text_.fragment_count() == 0));
    return r;
  }

  SemiDynamicString text_;
  DequeOrientation orientation_;
  std::deque<FragmentPair> queue_;
  std::uint64_t pushes_ = 0;
  std::uint64_t pops_ = 0;
  EngineStats stats_;
};

}  // namespace sdmin
