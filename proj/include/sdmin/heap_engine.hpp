#pragma once

#include <set>

#include "sdmin/engine.hpp"
#include "sdmin/sdstring.hpp"

namespace sdmin {

// Ordered-set engine: keeps every live fragment pair in a std::set sorted by
// (value, position).  All four border operations run in O(log size) value
// comparisons; the minimizer is the smallest element.  Simple and fully
// general, but carries a logarithmic factor the stack-based engines avoid.
class HeapEngine final : public MinimizerEngine {
 public:
  HeapEngine(const HashConfig& cfg, OrderMode mode, Pos start = 0)
      : text_(cfg, mode, start) {}

  std::optional<FragmentPair> prepend(Letter a) override {
    auto created = text_.prepend(a);
    if (created) insert(*created);
    return done(created);
  }

  std::optional<FragmentPair> append(Letter a) override {
    auto created = text_.append(a);
    if (created) insert(*created);
    return done(created);
  }

  std::optional<FragmentPair> delete_first() override {
    // Erase before mutating the text: under the letterwise order the set's
    // comparator dereferences the text, so the doomed pair must leave the set
    // while its letters are still in place.
    std::optional<FragmentPair> doomed;
    if (text_.fragment_count() >= 1) doomed = text_.front_fragment();
    if (doomed) erase(*doomed);
    auto removed = text_.delete_first();
    return done(removed);
  }

  std::optional<FragmentPair> delete_last() override {
    std::optional<FragmentPair> doomed;
    if (text_.fragment_count() >= 1) doomed = text_.back_fragment();
    if (doomed) erase(*doomed);
    auto removed = text_.delete_last();
    return done(removed);
  }

  std::optional<FragmentPair> minimizer() const override {
    if (pairs_.empty()) return std::nullopt;
    return *pairs_.begin();
  }

  Pos start_pos() const override { return text_.start_pos(); }
  std::int64_t size() const override { return text_.size(); }
  std::int64_t fragment_count() const override { return text_.fragment_count(); }
  const EngineStats& stats() const override { return stats_; }
  EngineKind kind() const override { return EngineKind::Heap; }

  const SemiDynamicString& text() const { return text_; }

 private:
  void insert(const FragmentPair& p) {
    pairs_.insert(p);
    ++stats_.work;
  }

  void erase(const FragmentPair& p) {
    auto it = pairs_.find(p);
    assert(it != pairs_.end() && "live fragment missing from the ordered set");
    pairs_.erase(it);
    ++stats_.work;
  }

  std::optional<FragmentPair> done(std::optional<FragmentPair> r) {
    ++stats_.ops;
    stats_.live_pairs = pairs_.size();
    if (stats_.live_pairs > stats_.peak_live_pairs) stats_.peak_live_pairs = stats_.live_pairs;
    assert(static_cast<std::int64_t>(pairs_.size()) == text_.fragment_count());
    return r;
  }

  SemiDynamicString text_;
  std::set<FragmentPair, pair_less> pairs_;
  EngineStats stats_;
};

}  // namespace sdmin
