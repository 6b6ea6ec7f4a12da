#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "agsac/chromosome.hpp"
#include "agsac/dataset.hpp"
#include "agsac/estimator.hpp"
#include "agsac/operators.hpp"
#include "agsac/rng.hpp"
#include "agsac/wheel.hpp"

namespace agsac {

// Knobs of the adaptive engine. gamma powers the crossover-selection curve,
// delta scales the exponential mutation-selection curve.
struct AdaptiveParams {
  double gamma = 3.0;
  double delta = 1.0;
  int population_size = 10;
  int elitism = 1;
};

// Total number of model fits allowed in a run; one unit per evaluation of a
// dirty chromosome.
struct Budget {
  int max_models = 0;
  int used = 0;

  bool exhausted() const { return used >= max_models; }
};

struct TracePoint {
  int models_generated = 0;
  int best_inliers = 0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

// Per-run series of (models generated, best inlier count so far), one tick
// per evaluation. best_model is empty only if every fit was degenerate.
struct RunTrace {
  std::vector<TracePoint> series;
  Chromosome best_chromosome;
  Model best_model;

  int best_inliers() const {
    return series.empty() ? 0 : series.back().best_inliers;
  }

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

// Called after the initial population and after each completed generation.
using GenerationObserver = std::function<void(const Population&)>;

// Scores chromosomes and owns the run bookkeeping: budget, trace, and the
// best-so-far hypothesis. The paper's x-axis counts fresh fits only, so clean
// chromosomes must never be re-submitted.
class Evaluator {
 public:
  Evaluator(const Estimator& estimator, const Dataset& data, Budget budget);

  // Fits a model from the genes of a dirty chromosome and caches the inlier
  // count (0 on a degenerate sample). Returns false, leaving the chromosome
  // untouched, once the budget is exhausted.
  bool evaluate(Chromosome& c);

  const Budget& budget() const { return budget_; }
  int best_inliers() const { return best_score_ < 0 ? 0 : best_score_; }
  const Chromosome& best_chromosome() const { return best_chromosome_; }

  RunTrace take_trace();

 private:
  const Estimator& estimator_;
  const Dataset& data_;
  Budget budget_;
  RunTrace trace_;
  int best_score_ = -1;
  Chromosome best_chromosome_;
};

// Classic uniform sampling. Stops at budget exhaustion or once the standard
// iteration bound for the given confidence is reached; pass a confidence of
// 1 - 1e-12 to hold the fixed-model-count protocol.
RunTrace run_ransac(const Estimator& estimator, const Dataset& data,
                    Budget budget, std::uint64_t seed, double confidence);

// Baseline genetic engine: best half as parents, uniform crossover children
// refill the other half, per-gene mutation with probability 1/(2m).
RunTrace run_gasac(const Estimator& estimator, const Dataset& data,
                   int population_size, Budget budget, std::uint64_t seed,
                   const GenerationObserver& observer = {});

// Adaptive engine: per-individual crossover/mutation probabilities from
// normalized fitness, full-chromosome mutation sampled from a learning
// roulette wheel.
RunTrace run_adaptive_gasac(const Estimator& estimator, const Dataset& data,
                            const AdaptiveParams& params, Budget budget,
                            std::uint64_t seed,
                            const GenerationObserver& observer = {});

// Standard RANSAC termination bound: ceil(log(1-confidence)/log(1-w^m)) with
// w = best_inliers/n. Returns a saturating large value while w^m is 0.
long long ransac_iteration_bound(int best_inliers, int n, int m,
                                 double confidence);

}  // namespace agsac
