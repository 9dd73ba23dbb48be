#include "sdmin/scan.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "sdmin/engine_factory.hpp"
#include "sdmin/two_layer_engine.hpp"

namespace sdmin {

namespace {

void check_scan_args(int w, int k) {
  if (w < 1) throw std::invalid_argument("window must contain at least one fragment");
  if (k < 1) throw std::invalid_argument("fragment length must be at least 1");
}

// Drives any engine across the string; emits after each full window.
template <class Engine>
std::vector<Pos> scan_with(Engine& engine, std::span<const Letter> s, int w, int k) {
  std::vector<Pos> out;
  Pos n = static_cast<Pos>(s.size());
  Pos window_letters = static_cast<Pos>(w) + k - 1;
  if (n < window_letters)
    throw std::invalid_argument("input too short: one window needs w+k-1 = " +
                                std::to_string(window_letters) + " letters");
  auto emit = [&] {
    auto m = engine.minimizer();
    assert(m.has_value());
    assert(out.empty() || m->pos >= out.back());
    if (out.empty() || out.back() != m->pos) out.push_back(m->pos);
  };
  for (Pos i = 0; i < window_letters; ++i) engine.append(s[static_cast<std::size_t>(i)]);
  emit();
  for (Pos i = window_letters; i < n; ++i) {
    engine.append(s[static_cast<std::size_t>(i)]);
    engine.delete_first();
    emit();
  }
  return out;
}

}  // namespace

std::vector<Pos> minimizer_set(std::span<const Letter> s, int w, int k, EngineKind kind,
                               OrderMode mode, std::uint64_t seed, const BlockScheme& scheme) {
  check_scan_args(w, k);
  HashConfig cfg = HashConfig::from_seed(k, seed);
  auto engine = make_engine(kind, cfg, mode, scheme, DequeOrientation::LeftToRight);
  return scan_with(*engine, s, w, k);
}

std::vector<Pos> minimizer_set_space_efficient(std::span<const Letter> s, int w, int k,
                                               OrderMode mode, std::uint64_t seed,
                                               std::uint64_t* peak_pairs) {
  check_scan_args(w, k);
  HashConfig cfg = HashConfig::from_seed(k, seed);
  TwoLayerEngineT<TextWindow> engine(BlockScheme::progressing(), s, cfg, mode, Pos{0});
  auto out = scan_with(engine, s, w, k);
  if (peak_pairs) *peak_pairs = engine.stats().peak_live_pairs;
  return out;
}

std::vector<Pos> minimizer_set_brute(std::span<const Letter> s, int w, int k, OrderMode mode,
                                     std::uint64_t seed) {
  check_scan_args(w, k);
  HashConfig cfg = HashConfig::from_seed(k, seed);
  std::vector<Pos> out;
  Pos n = static_cast<Pos>(s.size());
  Pos window_letters = static_cast<Pos>(w) + k - 1;
  if (n < window_letters)
    throw std::invalid_argument("input too short: one window needs w+k-1 = " +
                                std::to_string(window_letters) + " letters");
  std::vector<std::uint64_t> krf;
  if (mode == OrderMode::Krf && n >= k) {
    krf.reserve(static_cast<std::size_t>(n - k + 1));
    for (Pos p = 0; p + k <= n; ++p)
      krf.push_back(
          krf_direct(s.subspan(static_cast<std::size_t>(p), static_cast<std::size_t>(k)), cfg));
  }
  auto less_at = [&](Pos a, Pos b) {
    if (mode == OrderMode::Krf)
      return krf[static_cast<std::size_t>(a)] < krf[static_cast<std::size_t>(b)];
    return std::lexicographical_compare(s.begin() + a, s.begin() + a + k, s.begin() + b,
                                        s.begin() + b + k);
  };
  for (Pos i = 0; i + window_letters <= n; ++i) {
    Pos best = i;
    for (Pos p = i + 1; p < i + w; ++p)
      if (less_at(p, best)) best = p;
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sdmin
