#pragma once

#include <span>
#include <vector>

#include "agsac/chromosome.hpp"
#include "agsac/rng.hpp"

namespace agsac {

// Replacement-selection distribution over dataset indices, one positive
// weight per index. Starts uniform and is reinforced toward genes that appear
// in high-fitness parents, so mutation gradually prefers likely inliers.
class RouletteWheel {
 public:
  explicit RouletteWheel(int n);

  int size() const { return static_cast<int>(weights_.size()); }
  double weight(int gene) const { return weights_[gene]; }
  double total_weight() const { return total_; }
  double selection_probability(int gene) const {
    return weights_[gene] / total_;
  }

  void reinforce(int gene, double amount);

  // One draw from the weight distribution, skipping `excluded` (renormalizing
  // over the remaining indices). excluded.size() must leave at least one
  // candidate.
  int sample(Rng& rng, std::span<const int> excluded = {}) const;

 private:
  std::vector<double> weights_;
  double total_ = 0.0;
};

// Adds each parent's normalized fitness to the weight of every gene the
// parent carries. Weights never decrease and stay positive.
void train_wheel(RouletteWheel& wheel, const std::vector<Chromosome>& parents,
                 const std::vector<double>& norm_fitness);

}  // namespace agsac
