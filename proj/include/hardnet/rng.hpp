#pragma once

#include <cmath>
#include <cstdint>

namespace hardnet {

namespace detail {

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Deterministic counter-based generator (splitmix64 over a keyed counter).
// A stream is fully identified by (seed, s0, s1, s2), so draws for one
// (point, patch, purpose) tuple never depend on how many draws other tuples
// made. Identical keys produce identical sequences on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t s0 = 0, uint64_t s1 = 0, uint64_t s2 = 0) {
    uint64_t k = detail::mix64(seed);
    k = detail::mix64(k ^ detail::mix64(s0 ^ 0x8f462907ull));
    k = detail::mix64(k ^ detail::mix64(s1 ^ 0x2545f491ull));
    k = detail::mix64(k ^ detail::mix64(s2 ^ 0x61c88646ull));
    state_ = k;
  }

  // Derive an independent stream without disturbing this one.
  Rng split(uint64_t stream) const { return Rng(state_, 0x5f356495ull, stream); }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n == 0 is the caller's bug; returns 0.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal via Box-Muller. Consumes two draws per call.
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  bool coin() { return (next_u64() & 1ull) != 0; }

 private:
  uint64_t state_;
};

// Pure keyed hash to [0, 1); used for lattice noise where a value must be a
// function of coordinates alone.
inline double hash_unit(uint64_t key, uint64_t a, uint64_t b, uint64_t c) {
  uint64_t h = detail::mix64(key ^ detail::mix64(a));
  h = detail::mix64(h ^ detail::mix64(b + 0x9e3779b97f4a7c15ULL));
  h = detail::mix64(h ^ detail::mix64(c + 0x85ebca6b0ull));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace hardnet
