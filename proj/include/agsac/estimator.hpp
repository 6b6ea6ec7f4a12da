#pragma once

#include <memory>
#include <optional>
#include <span>

#include "agsac/dataset.hpp"
#include "agsac/geometry.hpp"

namespace agsac {

// Minimal-solver contract shared by every engine: a sample size m, a fit from
// m observations, and a per-observation residual. fit returns empty on a
// degenerate sample instead of failing; residual may be +infinity (projection
// at infinity), which never counts as an inlier.
class Estimator {
 public:
  virtual ~Estimator() = default;

  virtual int minimal_sample_size() const = 0;
  virtual double inlier_threshold() const = 0;
  virtual std::optional<Model> fit(const Dataset& data,
                                   std::span<const int> indices) const = 0;
  virtual double residual(const Model& model, const Dataset& data,
                          int index) const = 0;
};

class LineEstimator final : public Estimator {
 public:
  explicit LineEstimator(double inlier_threshold)
      : threshold_(inlier_threshold) {}

  int minimal_sample_size() const override { return 2; }
  double inlier_threshold() const override { return threshold_; }
  std::optional<Model> fit(const Dataset& data,
                           std::span<const int> indices) const override;
  double residual(const Model& model, const Dataset& data,
                  int index) const override;

 private:
  double threshold_;
};

class HomographyEstimator final : public Estimator {
 public:
  explicit HomographyEstimator(double inlier_threshold)
      : threshold_(inlier_threshold) {}

  int minimal_sample_size() const override { return 4; }
  double inlier_threshold() const override { return threshold_; }
  std::optional<Model> fit(const Dataset& data,
                           std::span<const int> indices) const override;
  double residual(const Model& model, const Dataset& data,
                  int index) const override;

 private:
  double threshold_;
};

// Observations with residual strictly below the threshold; sampled points
// included.
int count_inliers(const Estimator& estimator, const Model& model,
                  const Dataset& data);

// Builds the estimator matching a dataset's task.
std::unique_ptr<Estimator> make_estimator(Task task, double inlier_threshold);

}  // namespace agsac
