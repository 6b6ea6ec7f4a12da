#include "agsac/wheel.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace agsac {

namespace {

bool contains(std::span<const int> xs, int v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

}  // namespace

RouletteWheel::RouletteWheel(int n)
    : weights_(static_cast<std::size_t>(n), 1.0),
      total_(static_cast<double>(n)) {
  if (n <= 0) throw std::invalid_argument("roulette wheel: n must be positive");
}

void RouletteWheel::reinforce(int gene, double amount) {
  weights_[gene] += amount;
  total_ += amount;
}

int RouletteWheel::sample(Rng& rng, std::span<const int> excluded) const {
  double available = total_;
  for (int g : excluded) available -= weights_[g];
  assert(available > 0.0);

  const double u = rng.uniform01() * available;
  double acc = 0.0;
  int last_valid = -1;
  for (int g = 0; g < size(); ++g) {
    if (contains(excluded, g)) continue;
    acc += weights_[g];
    last_valid = g;
    if (u < acc) return g;
  }
  // Floating-point shortfall at the very top of the range.
  return last_valid;
}

void train_wheel(RouletteWheel& wheel, const std::vector<Chromosome>& parents,
                 const std::vector<double>& norm_fitness) {
  assert(parents.size() == norm_fitness.size());
  for (std::size_t i = 0; i < parents.size(); ++i) {
    for (int g : parents[i].genes) wheel.reinforce(g, norm_fitness[i]);
  }
}

}  // namespace agsac
