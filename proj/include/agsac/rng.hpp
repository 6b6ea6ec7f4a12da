#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace agsac {

// Deterministic random source threaded through every engine and the data
// generator. std::mt19937_64 has a standard-pinned output sequence, and all
// variate transforms live here (std::*_distribution is free to differ across
// standard libraries), so one seed yields the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Unbiased integer in [0, bound). bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x = gen_();
    while (x > limit) x = gen_();
    return x % bound;
  }

  int uniform_int(int lo, int hi_exclusive) {
    return lo + static_cast<int>(next_below(
                    static_cast<std::uint64_t>(hi_exclusive - lo)));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Box-Muller, no spare caching: two uniforms per variate.
  double normal(double mean = 0.0, double sigma = 1.0) {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    constexpr double two_pi = 6.283185307179586476925287;
    return mean + sigma * r * std::cos(two_pi * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace agsac
