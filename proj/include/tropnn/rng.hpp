#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace tropnn {

/// Counter-based pseudo-random generator. Output i of stream (seed) is a pure
/// function of (seed, i), so draws can be sharded across workers by deriving
/// per-shard sub-streams with fork() while staying bit-reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix(seed_ + 0x9e3779b97f4a7c15ULL * (++counter_)); }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via Box-Muller; consumes exactly two counter values.
  double next_gaussian() {
    double u1 = next_double();
    double u2 = next_double();
    u1 = 1.0 - u1;  // (0, 1]
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  /// Rademacher +/-1.
  double next_sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

  /// Derived independent stream; deterministic in (seed, stream id).
  CounterRng fork(std::uint64_t stream) const { return CounterRng(mix(seed_ ^ mix(stream))); }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace tropnn
