#pragma once

#include <cstdint>

#include "agsac/dataset.hpp"
#include "agsac/estimator.hpp"
#include "agsac/geometry.hpp"

namespace agsac {

// Recipe for a synthetic dataset with an exactly controlled inlier ratio.
// floor(n * inlier_ratio) observations are consistent with a hidden model up
// to Gaussian noise; the rest are drawn uniformly in the outlier box and
// re-drawn until their ground-truth residual clears 3x the inlier threshold,
// so labels are unambiguous.
struct SyntheticSpec {
  Task task = Task::line;
  int n = 100;
  double inlier_ratio = 0.5;
  double noise_sigma = 0.0;
  double outlier_box = 50.0;  // half-width of the uniform outlier region
  std::uint64_t seed = 0;
};

struct LabeledData {
  Dataset dataset;
  Model truth;
};

Dataset generate(const SyntheticSpec& spec, double inlier_threshold);

// Same construction, keeping the hidden model for tests and diagnostics.
LabeledData generate_with_truth(const SyntheticSpec& spec,
                                double inlier_threshold);

// Exhaustively fits every m-subset and returns the maximum inlier count.
// Refuses when C(n, m) exceeds 500000.
int oracle_best(const Estimator& estimator, const Dataset& data);

}  // namespace agsac
