#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace sdmin {

using Letter = std::uint8_t;
using Pos = std::int64_t;

// Default fingerprint modulus: the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Parameters for fingerprinting length-k fragments.  Immutable once built;
// base_inverse and base_pow_km1 are precomputed so that both rolling
// directions are O(1).  Letter codes must lie in [0, modulus).
struct HashConfig {
  int k = 1;
  std::uint64_t modulus = kMersenne61;
  std::uint64_t base = 2;
  std::uint64_t base_inverse = 0;  // base * base_inverse == 1  (mod modulus)
  std::uint64_t base_pow_km1 = 0;  // base^(k-1) mod modulus
  std::uint64_t seed = 0;

  // Production path: fixed Mersenne modulus, base drawn uniformly from
  // [2, modulus-2] by a deterministic seeded generator.
  static HashConfig from_seed(int k, std::uint64_t seed) {
    std::uint64_t s = seed;
    std::uint64_t base = 2 + splitmix64(s) % (kMersenne61 - 3);
    return with_base(k, kMersenne61, base, seed);
  }

  // Explicit modulus/base, mainly for tests with hand-computed values.
  // The modulus must be prime (base_inverse comes from Fermat's little
  // theorem).
  static HashConfig with_base(int k, std::uint64_t modulus, std::uint64_t base,
                              std::uint64_t seed = 0) {
    if (k < 1) throw std::invalid_argument("fragment length k must be >= 1");
    if (modulus < 5) throw std::invalid_argument("modulus too small");
    if (base < 2 || base > modulus - 2) throw std::invalid_argument("base out of range");
    HashConfig cfg;
    cfg.k = k;
    cfg.modulus = modulus;
    cfg.base = base;
    cfg.base_inverse = pow_mod(base, modulus - 2, modulus);
    cfg.base_pow_km1 = pow_mod(base, static_cast<std::uint64_t>(k) - 1, modulus);
    cfg.seed = seed;
    return cfg;
  }
};

// Polynomial fingerprint: sum of letters[j] * base^(k-1-j) mod modulus.
inline std::uint64_t krf_direct(std::span<const Letter> letters, const HashConfig& cfg) {
  if (static_cast<int>(letters.size()) != cfg.k)
    throw std::invalid_argument("krf_direct: fragment length differs from k");
  std::uint64_t h = 0;
  for (Letter a : letters) {
    assert(a < cfg.modulus);
    h = mul_mod(h, cfg.base, cfg.modulus) + a;
    if (h >= cfg.modulus) h -= cfg.modulus;
  }
  return h;
}

// Fingerprint of the fragment at p+1 given the one at p.  `outgoing` is the
// letter at p, `incoming` the letter at p+k.
inline std::uint64_t roll_right(std::uint64_t at_p, Letter outgoing, Letter incoming,
                                const HashConfig& cfg) {
  assert(outgoing < cfg.modulus && incoming < cfg.modulus);
  std::uint64_t h = at_p + cfg.modulus - mul_mod(outgoing, cfg.base_pow_km1, cfg.modulus);
  if (h >= cfg.modulus) h -= cfg.modulus;
  h = mul_mod(h, cfg.base, cfg.modulus) + incoming;
  if (h >= cfg.modulus) h -= cfg.modulus;
  return h;
}

// Fingerprint of the fragment at p-1 given the one at p.  `incoming` is the
// letter at p-1, `outgoing` the letter at p+k-1.
inline std::uint64_t roll_left(std::uint64_t at_p, Letter incoming, Letter outgoing,
                               const HashConfig& cfg) {
  assert(outgoing < cfg.modulus && incoming < cfg.modulus);
  std::uint64_t h = at_p + cfg.modulus - outgoing;
  if (h >= cfg.modulus) h -= cfg.modulus;
  h = mul_mod(h, cfg.base_inverse, cfg.modulus);
  h += mul_mod(incoming, cfg.base_pow_km1, cfg.modulus);
  if (h >= cfg.modulus) h -= cfg.modulus;
  return h;
}

}  // namespace sdmin
