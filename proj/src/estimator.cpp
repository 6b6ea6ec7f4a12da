#include "agsac/estimator.hpp"

#include <array>
#include <cassert>

namespace agsac {

std::optional<Model> LineEstimator::fit(const Dataset& data,
                                        std::span<const int> indices) const {
  assert(indices.size() == 2);
  const auto& pts = data.points();
  return fit_line(pts[indices[0]], pts[indices[1]]);
}

double LineEstimator::residual(const Model& model, const Dataset& data,
                               int index) const {
  return line_residual(model, data.points()[index]);
}

std::optional<Model> HomographyEstimator::fit(
    const Dataset& data, std::span<const int> indices) const {
  assert(indices.size() == 4);
  const auto& cs = data.correspondences();
  const std::array<Correspondence, 4> sample = {
      cs[indices[0]], cs[indices[1]], cs[indices[2]], cs[indices[3]]};
  return fit_homography(std::span<const Correspondence, 4>(sample));
}

double HomographyEstimator::residual(const Model& model, const Dataset& data,
                                     int index) const {
  return homography_residual(model, data.correspondences()[index]);
}

int count_inliers(const Estimator& estimator, const Model& model,
                  const Dataset& data) {
  const double threshold = estimator.inlier_threshold();
  int count = 0;
  for (int i = 0; i < data.size(); ++i) {
    if (estimator.residual(model, data, i) < threshold) ++count;
  }
  return count;
}

std::unique_ptr<Estimator> make_estimator(Task task, double inlier_threshold) {
  if (task == Task::line)
    return std::make_unique<LineEstimator>(inlier_threshold);
  return std::make_unique<HomographyEstimator>(inlier_threshold);
}

}  // namespace agsac
