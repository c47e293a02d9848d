#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace toralf {

// Deterministic uniform generator: identical output for identical seeds on
// any platform (mt19937_64 raw bits, not the distribution adapters).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // log-uniform in [a, b], a > 0
  double log_uniform(double a, double b) {
    return a * std::exp(uniform() * std::log(b / a));
  }

  int below(int n) { return static_cast<int>(uniform() * n); }

private:
  std::mt19937_64 eng_;
};

}  // namespace toralf
