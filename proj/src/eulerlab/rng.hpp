#pragma once

#include <cstdint>
#include <random>

namespace eulerlab {

// Seeded uniform source. The double mapping is done here rather than through
// std::uniform_real_distribution so sample sequences do not depend on the
// standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Magnitude uniform in [lo, hi], random sign.
  double signed_magnitude(double lo, double hi) {
    const double m = uniform(lo, hi);
    return (engine_() & 1U) != 0U ? -m : m;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eulerlab
