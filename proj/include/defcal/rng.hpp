#pragma once
// rng.hpp — small deterministic generator for seeded property checks.
// splitmix64; identical streams on every platform, unlike <random>'s
// distributions.

#include <cstdint>

namespace defcal {

struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n must be nonzero.
  uint64_t below(uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi] inclusive.
  long range(long lo, long hi) { return lo + long(below(uint64_t(hi - lo + 1))); }
};

}  // namespace defcal
