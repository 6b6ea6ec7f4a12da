#include "agsac/synth.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "agsac/rng.hpp"

namespace agsac {

namespace {

constexpr int kMaxRejections = 10000;
constexpr std::uint64_t kOracleLimit = 500000;

// floor(n * ratio) with a guard against binary representation shortfall
// (200 * 0.3 evaluates to 59.999... in doubles).
int inlier_count_for(int n, double ratio) {
  return static_cast<int>(std::floor(n * ratio + 1e-9));
}

void validate(const SyntheticSpec& spec, double threshold) {
  if (spec.n < 8) throw std::invalid_argument("generate: n must be >= 8");
  if (!(spec.inlier_ratio > 0.0 && spec.inlier_ratio <= 1.0)) {
    throw std::invalid_argument("generate: inlier_ratio must be in (0, 1]");
  }
  if (spec.noise_sigma < 0.0) {
    throw std::invalid_argument("generate: noise_sigma must be >= 0");
  }
  if (spec.outlier_box <= 0.0) {
    throw std::invalid_argument("generate: outlier_box must be > 0");
  }
  if (threshold <= 0.0) {
    throw std::invalid_argument("generate: inlier_threshold must be > 0");
  }
  const int m = spec.task == Task::line ? 2 : 4;
  if (inlier_count_for(spec.n, spec.inlier_ratio) < m) {
    throw std::invalid_argument(
        "generate: floor(n * inlier_ratio) below the minimal sample size");
  }
}

// Random homography that keeps the homogeneous w-coordinate well away from
// zero over the outlier box: similarity plus mild projective terms.
Model random_homography(double box, Rng& rng) {
  const double angle = rng.uniform(-0.4, 0.4);
  const double scale = rng.uniform(0.8, 1.25);
  const double tx = rng.uniform(-0.3, 0.3) * box;
  const double ty = rng.uniform(-0.3, 0.3) * box;
  const double g = rng.uniform(-0.1, 0.1) / box;
  const double h = rng.uniform(-0.1, 0.1) / box;
  const double ca = scale * std::cos(angle);
  const double sa = scale * std::sin(angle);
  return Model{{ca, -sa, tx, sa, ca, ty, g, h, 1.0}};
}

LabeledData generate_line(const SyntheticSpec& spec, double threshold,
                          Rng& rng) {
  const double box = spec.outlier_box;
  const double angle = rng.uniform(0.0, 3.14159265358979323846);
  const Point2 anchor{rng.uniform(-box / 2, box / 2),
                      rng.uniform(-box / 2, box / 2)};
  const Point2 dir{std::cos(angle), std::sin(angle)};
  const Point2 normal{-dir.y, dir.x};
  const Model truth{{normal.x, normal.y,
                     -(normal.x * anchor.x + normal.y * anchor.y)}};

  const int k = inlier_count_for(spec.n, spec.inlier_ratio);
  std::vector<Point2> pts;
  std::vector<std::uint8_t> labels;
  pts.reserve(spec.n);
  labels.reserve(spec.n);

  for (int i = 0; i < k; ++i) {
    const double t = rng.uniform(-box, box);
    const double offset = rng.normal(0.0, spec.noise_sigma);
    pts.push_back({anchor.x + t * dir.x + offset * normal.x,
                   anchor.y + t * dir.y + offset * normal.y});
    labels.push_back(1);
  }
  for (int i = k; i < spec.n; ++i) {
    int rejections = 0;
    while (true) {
      const Point2 p{rng.uniform(-box, box), rng.uniform(-box, box)};
      if (line_residual(truth, p) > 3.0 * threshold) {
        pts.push_back(p);
        labels.push_back(0);
        break;
      }
      if (++rejections >= kMaxRejections) {
        throw std::runtime_error(
            "generate: infeasible spec, outlier rejection stalled");
      }
    }
  }

  // Shuffle so inliers are not positionally grouped.
  std::vector<int> order(spec.n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<Point2> shuffled_pts(spec.n);
  std::vector<std::uint8_t> shuffled_labels(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    shuffled_pts[i] = pts[order[i]];
    shuffled_labels[i] = labels[order[i]];
  }
  return {Dataset::from_points(std::move(shuffled_pts),
                               std::move(shuffled_labels)),
          truth};
}

LabeledData generate_homography(const SyntheticSpec& spec, double threshold,
                                Rng& rng) {
  const double box = spec.outlier_box;
  const Model truth = random_homography(box, rng);

  const int k = inlier_count_for(spec.n, spec.inlier_ratio);
  std::vector<Correspondence> cs;
  std::vector<std::uint8_t> labels;
  cs.reserve(spec.n);
  labels.reserve(spec.n);

  for (int i = 0; i < k; ++i) {
    const Point2 src{rng.uniform(-box, box), rng.uniform(-box, box)};
    const auto dst = project(truth, src);
    // w stays in [0.8, 1.2] over the box by construction.
    cs.push_back({src,
                  {dst->x + rng.normal(0.0, spec.noise_sigma),
                   dst->y + rng.normal(0.0, spec.noise_sigma)}});
    labels.push_back(1);
  }
  for (int i = k; i < spec.n; ++i) {
    int rejections = 0;
    while (true) {
      const Correspondence c{{rng.uniform(-box, box), rng.uniform(-box, box)},
                             {rng.uniform(-box, box), rng.uniform(-box, box)}};
      if (homography_residual(truth, c) > 3.0 * threshold) {
        cs.push_back(c);
        labels.push_back(0);
        break;
      }
      if (++rejections >= kMaxRejections) {
        throw std::runtime_error(
            "generate: infeasible spec, outlier rejection stalled");
      }
    }
  }

  std::vector<int> order(spec.n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<Correspondence> shuffled_cs(spec.n);
  std::vector<std::uint8_t> shuffled_labels(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    shuffled_cs[i] = cs[order[i]];
    shuffled_labels[i] = labels[order[i]];
  }
  return {Dataset::from_correspondences(std::move(shuffled_cs),
                                        std::move(shuffled_labels)),
          truth};
}

std::uint64_t combinations(int n, int m) {
  std::uint64_t c = 1;
  for (int i = 1; i <= m; ++i) {
    c = c * static_cast<std::uint64_t>(n - m + i) / static_cast<std::uint64_t>(i);
    if (c > kOracleLimit * 1000) return c;  // far past the limit, stop early
  }
  return c;
}

}  // namespace

LabeledData generate_with_truth(const SyntheticSpec& spec,
                                double inlier_threshold) {
  validate(spec, inlier_threshold);
  Rng rng(spec.seed);
  return spec.task == Task::line
             ? generate_line(spec, inlier_threshold, rng)
             : generate_homography(spec, inlier_threshold, rng);
}

Dataset generate(const SyntheticSpec& spec, double inlier_threshold) {
  return generate_with_truth(spec, inlier_threshold).dataset;
}

int oracle_best(const Estimator& estimator, const Dataset& data) {
  const int n = data.size();
  const int m = estimator.minimal_sample_size();
  if (n < m) {
    throw std::invalid_argument("oracle_best: dataset smaller than m");
  }
  if (combinations(n, m) > kOracleLimit) {
    throw std::invalid_argument("oracle_best: C(n, m) exceeds 500000");
  }

  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  int best = 0;
  while (true) {
    if (const auto model = estimator.fit(data, idx)) {
      best = std::max(best, count_inliers(estimator, *model, data));
    }
    // Advance to the next combination in lexicographic order.
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace agsac
