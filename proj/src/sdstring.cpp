#include "sdmin/sdstring.hpp"

namespace sdmin {

std::optional<FragmentPair> SemiDynamicString::prepend(Letter a) {
  letters_.push_front(a);
  --start_;
  std::int64_t f = fragment_count();
  if (f == 0) return std::nullopt;
  if (f == 1) {
    front_krf_ = fragment_krf(*this, start_);
    back_krf_ = front_krf_;
  } else {
    // Old front fragment now sits at start_+1; its trailing letter is at
    // start_+k.
    front_krf_ = roll_left(front_krf_, a, letter_at(start_ + cfg_.k), cfg_);
  }
  return FragmentPair{start_, make_order_value(start_, front_krf_)};
}

std::optional<FragmentPair> SemiDynamicString::append(Letter a) {
  letters_.push_back(a);
  std::int64_t f = fragment_count();
  if (f == 0) return std::nullopt;
  Pos p = start_ + f - 1;
  if (f == 1) {
    back_krf_ = fragment_krf(*this, p);
    front_krf_ = back_krf_;
  } else {
    back_krf_ = roll_right(back_krf_, letter_at(p - 1), a, cfg_);
  }
  return FragmentPair{p, make_order_value(p, back_krf_)};
}

std::optional<FragmentPair> SemiDynamicString::delete_first() {
  if (letters_.empty()) throw std::logic_error("delete_first on empty string");
  std::int64_t f_old = fragment_count();
  std::optional<FragmentPair> removed;
  if (f_old >= 1) removed = FragmentPair{start_, make_order_value(start_, front_krf_)};
  Letter out = letters_.front();
  letters_.pop_front();
  ++start_;
  if (f_old >= 2) {
    front_krf_ = roll_right(front_krf_, out, letter_at(start_ + cfg_.k - 1), cfg_);
    if (f_old == 2) back_krf_ = front_krf_;
  }
  return removed;
}

std::optional<FragmentPair> SemiDynamicString::delete_last() {
  if (letters_.empty()) throw std::logic_error("delete_last on empty string");
  std::int64_t f_old = fragment_count();
  std::optional<FragmentPair> removed;
  Pos p = start_ + f_old - 1;
  if (f_old >= 1) removed = FragmentPair{p, make_order_value(p, back_krf_)};
  Letter out = letters_.back();
  letters_.pop_back();
  if (f_old >= 2) {
    back_krf_ = roll_left(back_krf_, letter_at(p - 1), out, cfg_);
    if (f_old == 2) front_krf_ = back_krf_;
  }
  return removed;
}

std::optional<FragmentPair> TextWindow::prepend(Letter a) {
  assert(lo_ > 0 && "window cannot extend before the base sequence");
  assert(base_[static_cast<std::size_t>(lo_ - 1)] == a && "prepended letter must match the base");
  (void)a;
  --lo_;
  std::int64_t f = fragment_count();
  if (f == 0) return std::nullopt;
  if (f == 1) {
    front_krf_ = fragment_krf(*this, lo_);
    back_krf_ = front_krf_;
  } else {
    front_krf_ = roll_left(front_krf_, base_[static_cast<std::size_t>(lo_)],
                           letter_at(lo_ + cfg_.k), cfg_);
  }
  return FragmentPair{lo_, make_order_value(lo_, front_krf_)};
}

std::optional<FragmentPair> TextWindow::append(Letter a) {
  assert(hi_ < static_cast<Pos>(base_.size()) && "window cannot extend past the base sequence");
  assert(base_[static_cast<std::size_t>(hi_)] == a && "appended letter must match the base");
  (void)a;
  ++hi_;
  std::int64_t f = fragment_count();
  if (f == 0) return std::nullopt;
  Pos p = lo_ + f - 1;
  if (f == 1) {
    back_krf_ = fragment_krf(*this, p);
    front_krf_ = back_krf_;
  } else {
    back_krf_ = roll_right(back_krf_, letter_at(p - 1), base_[static_cast<std::size_t>(hi_ - 1)], cfg_);
  }
  return FragmentPair{p, make_order_value(p, back_krf_)};
}

std::optional<FragmentPair> TextWindow::delete_first() {
  if (size() == 0) throw std::logic_error("delete_first on empty window");
  std::int64_t f_old = fragment_count();
  std::optional<FragmentPair> removed;
  if (f_old >= 1) removed = FragmentPair{lo_, make_order_value(lo_, front_krf_)};
  Letter out = base_[static_cast<std::size_t>(lo_)];
  ++lo_;
  if (f_old >= 2) {
    front_krf_ = roll_right(front_krf_, out, letter_at(lo_ + cfg_.k - 1), cfg_);
    if (f_old == 2) back_krf_ = front_krf_;
  }
  return removed;
}

std::optional<FragmentPair> TextWindow::delete_last() {
  if (size() == 0) throw std::logic_error("delete_last on empty window");
  std::int64_t f_old = fragment_count();
  std::optional<FragmentPair> removed;
  Pos p = lo_ + f_old - 1;
  if (f_old >= 1) removed = FragmentPair{p, make_order_value(p, back_krf_)};
  Letter out = base_[static_cast<std::size_t>(hi_ - 1)];
  --hi_;
  if (f_old >= 2) {
    back_krf_ = roll_left(back_krf_, letter_at(p - 1), out, cfg_);
    if (f_old == 2) front_krf_ = back_krf_;
  }
  return removed;
}

}  // namespace sdmin
