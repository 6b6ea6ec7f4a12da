#pragma once

#include <optional>
#include <span>
#include <vector>

namespace agsac {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct Correspondence {
  Point2 source;
  Point2 target;
};

// Fitted model parameters.
//   line:       {a, b, c} with a*x + b*y + c = 0 and (a, b) of unit length.
//   homography: 9 values, row-major 3x3, scaled so H[8] == 1 when |H[8]| is
//               not vanishing, otherwise to unit Frobenius norm.
struct Model {
  std::vector<double> params;

  bool is_line() const { return params.size() == 3; }
  bool is_homography() const { return params.size() == 9; }

  friend bool operator==(const Model&, const Model&) = default;
};

inline constexpr double kCoincidentTol = 1e-12;
inline constexpr double kCollinearTol = 1e-9;
inline constexpr double kHomogeneousTol = 1e-12;

// Line through two points. Empty when the points coincide within
// kCoincidentTol.
std::optional<Model> fit_line(const Point2& p0, const Point2& p1);

// Perpendicular distance |a*x + b*y + c|.
double line_residual(const Model& line, const Point2& p);

// Direct linear transform from four correspondences, with Hartley
// normalization applied internally for conditioning. Empty when any three
// source or target points are collinear within kCollinearTol or the linear
// system is rank-deficient.
std::optional<Model> fit_homography(std::span<const Correspondence, 4> sample);
std::optional<Model> fit_homography(const std::vector<Correspondence>& sample);

// Projective transform of p. Empty when the homogeneous w-coordinate falls
// below kHomogeneousTol in magnitude.
std::optional<Point2> project(const Model& homography, const Point2& p);

// One-directional transfer error: distance between c.target and the
// projection of c.source. Returns +infinity when the source projects to
// infinity; such residuals never count as inliers.
double homography_residual(const Model& homography, const Correspondence& c);

// Twice the signed triangle area; |.| <= tol means collinear.
double cross2(const Point2& p, const Point2& q, const Point2& r);

Model invert_homography(const Model& homography);

}  // namespace agsac
