#pragma once

#include <cstdint>
#include <random>

namespace abcircle {

// Deterministic PRNG used everywhere randomness is needed.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard, and all value mappings below are explicit, so a seed produces
// the same run on every platform (std distributions are deliberately
// avoided; their mappings are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1): top 53 bits of one engine draw.
  double u01() { return (engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + u01() * (hi - lo); }

  // Uniform integer in [0, n); n must be positive. Fixed-point multiply of
  // one engine draw (bias below n/2^64, and identical on every platform).
  std::uint64_t index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  // Uniform over [0, n) \ {skip}; n must be at least 2.
  std::uint64_t index_excluding(std::uint64_t n, std::uint64_t skip) {
    for (;;) {
      const std::uint64_t v = index(n);
      if (v != skip) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace abcircle
