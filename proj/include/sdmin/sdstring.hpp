#pragma once

#include <deque>
#include <optional>
#include <span>
#include <string>

#include "sdmin/text.hpp"

namespace sdmin {

// String supporting insertions and deletions of single letters at both ends.
// Positions are absolute and never change once assigned: the first letter of
// the initial content sits at position 0 (configurable), prepends extend to
// negative positions.  Fragment = length-k substring; the fragment at p
// covers letters [p, p+k-1].  Fingerprints of the first and last fragments
// are cached and maintained by O(1) rolls, so each border modification can
// report the fragment it created or destroyed in O(1).
class SemiDynamicString final : public TextBase {
 public:
  SemiDynamicString(const HashConfig& cfg, OrderMode mode, Pos start = 0)
      : TextBase(cfg, mode), start_(start) {}

  // Border modifications.  Each returns the FragmentPair that came into or
  // went out of existence, or nullopt when the string is too short to hold a
  // fragment.  Deleting from an empty string is a contract violation.
  std::optional<FragmentPair> prepend(Letter a);
  std::optional<FragmentPair> append(Letter a);
  std::optional<FragmentPair> delete_first();
  std::optional<FragmentPair> delete_last();

  Letter letter_at(Pos pos) const override {
    auto idx = pos - start_;
    if (idx < 0 || idx >= static_cast<Pos>(letters_.size()))
      throw std::out_of_range("letter_at: position outside the current string");
    return letters_[static_cast<std::size_t>(idx)];
  }

  Pos start_pos() const { return start_; }
  std::int64_t size() const { return static_cast<std::int64_t>(letters_.size()); }
  std::int64_t fragment_count() const {
    std::int64_t n = size() - cfg_.k + 1;
    return n > 0 ? n : 0;
  }

  // Peek at the extreme fragments without modifying anything.
  std::optional<FragmentPair> front_fragment() const {
    if (fragment_count() == 0) return std::nullopt;
    return FragmentPair{start_, make_order_value(start_, front_krf_)};
  }
  std::optional<FragmentPair> back_fragment() const {
    if (fragment_count() == 0) return std::nullopt;
    Pos p = start_ + fragment_count() - 1;
    return FragmentPair{p, make_order_value(p, back_krf_)};
  }

  OrderValue make_order_value(Pos pos, std::uint64_t krf) const {
    OrderValue v;
    v.mode = mode_;
    v.krf = krf;
    v.text = this;
    v.pos = pos;
    return v;
  }

  // The k letters of the fragment at `pos`, for tests and diagnostics.
  std::string fragment_string(Pos pos) const {
    std::string s;
    for (int i = 0; i < cfg_.k; ++i) s.push_back(static_cast<char>(letter_at(pos + i)));
    return s;
  }

  std::uint64_t front_krf() const { return front_krf_; }
  std::uint64_t back_krf() const { return back_krf_; }

 private:
  std::deque<Letter> letters_;
  Pos start_ = 0;
  std::uint64_t front_krf_ = 0;  // fingerprint of the fragment at start_
  std::uint64_t back_krf_ = 0;   // fingerprint of the last fragment
};

// Read-only window over an external byte sequence, presenting the same
// border-modification interface as SemiDynamicString without copying any
// letters.  Positions coincide with indices into the base sequence.  The
// window starts empty at index `origin`; append/prepend take the letter for
// interface uniformity and verify it matches the base sequence.
class TextWindow final : public TextBase {
 public:
  TextWindow(std::span<const Letter> base, const HashConfig& cfg, OrderMode mode,
             Pos origin = 0)
      : TextBase(cfg, mode), base_(base), lo_(origin), hi_(origin) {}

  std::optional<FragmentPair> prepend(Letter a);
  std::optional<FragmentPair> append(Letter a);
  std::optional<FragmentPair> delete_first();
  std::optional<FragmentPair> delete_last();

  Letter letter_at(Pos pos) const override {
    if (pos < lo_ || pos >= hi_)
      throw std::out_of_range("letter_at: position outside the current window");
    return base_[static_cast<std::size_t>(pos)];
  }

  Pos start_pos() const { return lo_; }
  std::int64_t size() const { return hi_ - lo_; }
  std::int64_t fragment_count() const {
    std::int64_t n = size() - cfg_.k + 1;
    return n > 0 ? n : 0;
  }

  std::optional<FragmentPair> front_fragment() const {
    if (fragment_count() == 0) return std::nullopt;
    return FragmentPair{lo_, make_order_value(lo_, front_krf_)};
  }
  std::optional<FragmentPair> back_fragment() const {
    if (fragment_count() == 0) return std::nullopt;
    Pos p = lo_ + fragment_count() - 1;
    return FragmentPair{p, make_order_value(p, back_krf_)};
  }

  OrderValue make_order_value(Pos pos, std::uint64_t krf) const {
    OrderValue v;
    v.mode = mode_;
    v.krf = krf;
    v.text = this;
    v.pos = pos;
    return v;
  }

  std::uint64_t front_krf() const { return front_krf_; }
  std::uint64_t back_krf() const { return back_krf_; }

 private:
  std::span<const Letter> base_;
  Pos lo_ = 0, hi_ = 0;  // window is [lo_, hi_)
  std::uint64_t front_krf_ = 0;
  std::uint64_t back_krf_ = 0;
};

}  // namespace sdmin
