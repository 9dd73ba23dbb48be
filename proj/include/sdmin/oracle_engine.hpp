#pragma once

#include "sdmin/engine.hpp"
#include "sdmin/sdstring.hpp"

namespace sdmin {

// Reference engine: answers minimizer queries by scanning every fragment of
// the current string and hashing it from scratch.  O(size * k) per query,
// used as the ground truth the fast engines are tested against.
class OracleEngine final : public MinimizerEngine {
 public:
  OracleEngine(const HashConfig& cfg, OrderMode mode, Pos start = 0)
      : text_(cfg, mode, start) {}

  std::optional<FragmentPair> prepend(Letter a) override { return count(text_.prepend(a)); }
  std::optional<FragmentPair> append(Letter a) override { return count(text_.append(a)); }
  std::optional<FragmentPair> delete_first() override { return count(text_.delete_first()); }
  std::optional<FragmentPair> delete_last() override { return count(text_.delete_last()); }

  std::optional<FragmentPair> minimizer() const override {
    std::int64_t f = text_.fragment_count();
    if (f == 0) return std::nullopt;
    std::optional<FragmentPair> best;
    for (Pos p = text_.start_pos(); p < text_.start_pos() + f; ++p) {
      FragmentPair cand{p, text_.make_order_value(p, fragment_krf(text_, p))};
      if (!best || pair_less{}(cand, *best)) best = cand;
    }
    return best;
  }

  Pos start_pos() const override { return text_.start_pos(); }
  std::int64_t size() const override { return text_.size(); }
  std::int64_t fragment_count() const override { return text_.fragment_count(); }
  const EngineStats& stats() const override { return stats_; }
  EngineKind kind() const override { return EngineKind::Oracle; }

  const SemiDynamicString& text() const { return text_; }

 private:
  std::optional<FragmentPair> count(std::optional<FragmentPair> r) {
    ++stats_.ops;
    stats_.live_pairs = static_cast<std::uint64_t>(text_.fragment_count());
    if (stats_.live_pairs > stats_.peak_live_pairs) stats_.peak_live_pairs = stats_.live_pairs;
    return r;
  }

  SemiDynamicString text_;
  EngineStats stats_;
};

}  // namespace sdmin
