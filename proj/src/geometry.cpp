#include "agsac/geometry.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace agsac {

namespace {

using Mat3 = Eigen::Matrix3d;

Mat3 to_eigen(const Model& h) {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = h.params[3 * r + c];
  return m;
}

Model to_model(const Mat3& m) {
  Model out;
  out.params.resize(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.params[3 * r + c] = m(r, c);
  return out;
}

// Hartley conditioning: centroid to origin, mean distance sqrt(2).
Mat3 conditioning_transform(std::span<const Point2> pts) {
  double cx = 0.0, cy = 0.0;
  for (const auto& p : pts) {
    cx += p.x;
    cy += p.y;
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());

  double mean_dist = 0.0;
  for (const auto& p : pts) mean_dist += std::hypot(p.x - cx, p.y - cy);
  mean_dist /= static_cast<double>(pts.size());

  const double s =
      mean_dist > kCoincidentTol ? std::sqrt(2.0) / mean_dist : 1.0;
  Mat3 t;
  t << s, 0, -s * cx, 0, s, -s * cy, 0, 0, 1;
  return t;
}

bool any_three_collinear(std::span<const Point2> pts) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (std::abs(cross2(pts[i], pts[j], pts[k])) <= kCollinearTol)
          return true;
  return false;
}

}  // namespace

double cross2(const Point2& p, const Point2& q, const Point2& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

std::optional<Model> fit_line(const Point2& p0, const Point2& p1) {
  const double dx = p1.x - p0.x;
  const double dy = p1.y - p0.y;
  const double len = std::hypot(dx, dy);
  if (len < kCoincidentTol) return std::nullopt;
  const double a = dy / len;
  const double b = -dx / len;
  const double c = -(a * p0.x + b * p0.y);
  return Model{{a, b, c}};
}

double line_residual(const Model& line, const Point2& p) {
  return std::abs(line.params[0] * p.x + line.params[1] * p.y +
                  line.params[2]);
}

std::optional<Point2> project(const Model& h, const Point2& p) {
  const auto& m = h.params;
  const double w = m[6] * p.x + m[7] * p.y + m[8];
  if (std::abs(w) < kHomogeneousTol) return std::nullopt;
  return Point2{(m[0] * p.x + m[1] * p.y + m[2]) / w,
                (m[3] * p.x + m[4] * p.y + m[5]) / w};
}

double homography_residual(const Model& h, const Correspondence& c) {
  const auto q = project(h, c.source);
  if (!q) return std::numeric_limits<double>::infinity();
  return std::hypot(q->x - c.target.x, q->y - c.target.y);
}

std::optional<Model> fit_homography(
    std::span<const Correspondence, 4> sample) {
  Point2 src[4], dst[4];
  for (int i = 0; i < 4; ++i) {
    src[i] = sample[i].source;
    dst[i] = sample[i].target;
  }
  if (any_three_collinear(src) || any_three_collinear(dst))
    return std::nullopt;

  const Mat3 ts = conditioning_transform(src);
  const Mat3 td = conditioning_transform(dst);

  Eigen::Matrix<double, 8, 9> a = Eigen::Matrix<double, 8, 9>::Zero();
  for (int i = 0; i < 4; ++i) {
    const double x = ts(0, 0) * src[i].x + ts(0, 2);
    const double y = ts(1, 1) * src[i].y + ts(1, 2);
    const double u = td(0, 0) * dst[i].x + td(0, 2);
    const double v = td(1, 1) * dst[i].y + td(1, 2);
    a.row(2 * i) << x, y, 1, 0, 0, 0, -u * x, -u * y, -u;
    a.row(2 * i + 1) << 0, 0, 0, x, y, 1, -v * x, -v * y, -v;
  }

  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 9>> svd(
      a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // A one-dimensional null space is expected; a second vanishing singular
  // value means the sample does not determine the homography.
  if (sv(7) <= 1e-10 * sv(0)) return std::nullopt;

  const Eigen::Matrix<double, 9, 1> hvec = svd.matrixV().col(8);
  Mat3 hn;
  hn << hvec(0), hvec(1), hvec(2), hvec(3), hvec(4), hvec(5), hvec(6),
      hvec(7), hvec(8);

  Mat3 h = td.inverse() * hn * ts;
  h /= h.norm();
  if (std::abs(h.determinant()) < 1e-12) return std::nullopt;

  if (std::abs(h(2, 2)) > kHomogeneousTol) h /= h(2, 2);
  return to_model(h);
}

std::optional<Model> fit_homography(const std::vector<Correspondence>& sample) {
  if (sample.size() != 4) return std::nullopt;
  return fit_homography(std::span<const Correspondence, 4>(sample.data(), 4));
}

Model invert_homography(const Model& h) {
  Mat3 inv = to_eigen(h).inverse();
  inv /= inv.norm();
  if (std::abs(inv(2, 2)) > kHomogeneousTol) inv /= inv(2, 2);
  return to_model(inv);
}

}  // namespace agsac
