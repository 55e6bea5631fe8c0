#pragma once

#include <cstdint>
#include <random>

namespace beliefdyn {

// Seeded random stream with explicit bit-to-double mappings. std::mt19937_64
// output is specified by the standard, and the mappings below avoid
// std::uniform_real_distribution, whose exact output is implementation
// defined. Identical seeds therefore reproduce identical scenarios on any
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace beliefdyn
