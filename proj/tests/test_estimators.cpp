#include <array>
#include <cmath>
#include <limits>

#include "agsac/estimator.hpp"
#include "agsac/geometry.hpp"
#include "agsac/rng.hpp"
#include "doctest.h"

using namespace agsac;

namespace {

Model translation(double tx, double ty) {
  return Model{{1, 0, tx, 0, 1, ty, 0, 0, 1}};
}

std::array<Correspondence, 4> unit_square_under(const Model& h) {
  const Point2 corners[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::array<Correspondence, 4> cs;
  for (int i = 0; i < 4; ++i) cs[i] = {corners[i], *project(h, corners[i])};
  return cs;
}

}  // namespace

TEST_CASE("fit_line recovers the two-point line") {
  const auto line = fit_line({0, 0}, {1, 1});
  REQUIRE(line.has_value());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(line->params[0] == doctest::Approx(s).epsilon(1e-12));
  CHECK(line->params[1] == doctest::Approx(-s).epsilon(1e-12));
  CHECK(line->params[2] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fit_line handles the axis-aligned case") {
  const auto line = fit_line({0, 2}, {1, 2});
  REQUIRE(line.has_value());
  // y = 2: normal is (0, +-1) with matching offset.
  CHECK(std::abs(line->params[1]) == doctest::Approx(1.0));
  CHECK(line->params[0] == doctest::Approx(0.0));
  CHECK(line_residual(*line, {5, 2}) == doctest::Approx(0.0));
  CHECK(line_residual(*line, {0, 5}) == doctest::Approx(3.0));
}

TEST_CASE("fit_line rejects coincident points") {
  CHECK_FALSE(fit_line({3, 3}, {3, 3}).has_value());
}

TEST_CASE("line residual of the fitting points vanishes") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Point2 p{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    const Point2 q{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    const auto line = fit_line(p, q);
    if (!line) continue;
    CHECK(line_residual(*line, p) < 1e-9);
    CHECK(line_residual(*line, q) < 1e-9);
    CHECK(std::hypot(line->params[0], line->params[1]) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("line residual is invariant under swapping the fitting points") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Point2 p{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Point2 q{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const Point2 probe{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    const auto ab = fit_line(p, q);
    const auto ba = fit_line(q, p);
    if (!ab || !ba) continue;
    CHECK(line_residual(*ab, probe) ==
          doctest::Approx(line_residual(*ba, probe)).epsilon(1e-12));
  }
}

TEST_CASE("line_residual distance formula") {
  const auto line = fit_line({0, 0}, {1, 1});
  CHECK(line_residual(*line, {1, 0}) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("fit_homography on identity correspondences") {
  const auto cs = unit_square_under(translation(0, 0));
  const auto h = fit_homography(std::span<const Correspondence, 4>(cs));
  REQUIRE(h.has_value());
  for (int i = 0; i < 9; ++i) {
    const double expected = (i % 4 == 0) ? 1.0 : 0.0;
    CHECK(h->params[i] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("fit_homography on a pure translation") {
  const auto cs = unit_square_under(translation(2, 3));
  const auto h = fit_homography(std::span<const Correspondence, 4>(cs));
  REQUIRE(h.has_value());
  const Model expected = translation(2, 3);
  for (int i = 0; i < 9; ++i) {
    CHECK(h->params[i] == doctest::Approx(expected.params[i]).epsilon(1e-9));
  }
}

TEST_CASE("fit_homography rejects collinear configurations") {
  const std::array<Correspondence, 4> collinear_src = {{
      {{0, 0}, {0, 0}},
      {{1, 1}, {1, 0}},
      {{2, 2}, {0, 1}},
      {{0, 1}, {1, 1}},
  }};
  CHECK_FALSE(
      fit_homography(std::span<const Correspondence, 4>(collinear_src))
          .has_value());

  const std::array<Correspondence, 4> collinear_dst = {{
      {{0, 0}, {0, 0}},
      {{1, 0}, {1, 0}},
      {{0, 1}, {2, 0}},
      {{1, 1}, {1, 1}},
  }};
  CHECK_FALSE(
      fit_homography(std::span<const Correspondence, 4>(collinear_dst))
          .has_value());
}

TEST_CASE("fit_homography reproduces random exact configurations") {
  Rng rng(21);
  int fitted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const double angle = rng.uniform(-1.0, 1.0);
    const double scale = rng.uniform(0.5, 2.0);
    Model truth{{scale * std::cos(angle), -scale * std::sin(angle),
                 rng.uniform(-5, 5), scale * std::sin(angle),
                 scale * std::cos(angle), rng.uniform(-5, 5),
                 rng.uniform(-0.01, 0.01), rng.uniform(-0.01, 0.01), 1.0}};
    std::array<Correspondence, 4> cs;
    bool ok = true;
    for (auto& c : cs) {
      const Point2 src{rng.uniform(-10, 10), rng.uniform(-10, 10)};
      const auto dst = project(truth, src);
      if (!dst) { ok = false; break; }
      c = {src, *dst};
    }
    if (!ok) continue;
    const auto h = fit_homography(std::span<const Correspondence, 4>(cs));
    if (!h) continue;  // near-collinear draw
    ++fitted;
    for (const auto& c : cs) {
      CHECK(homography_residual(*h, c) < 1e-6);
    }
  }
  CHECK(fitted > 250);
}

TEST_CASE("homography_residual examples") {
  const Model identity = translation(0, 0);
  CHECK(homography_residual(identity, {{1, 2}, {1, 2}}) ==
        doctest::Approx(0.0));
  CHECK(homography_residual(translation(2, 0), {{0, 0}, {0, 0}}) ==
        doctest::Approx(2.0));
  CHECK(homography_residual(identity, {{0, 0}, {3, 4}}) ==
        doctest::Approx(5.0));
}

TEST_CASE("projection at infinity yields an infinite residual") {
  // w = x for this matrix, so the source (0, 5) projects to infinity.
  const Model h{{1, 0, 0, 0, 1, 0, 1, 0, 0}};
  CHECK_FALSE(project(h, {0, 5}).has_value());
  CHECK(std::isinf(homography_residual(h, {{0, 5}, {1, 1}})));
}

TEST_CASE("homography composed with its inverse is the identity map") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = rng.uniform(-0.5, 0.5);
    const Model h{{std::cos(a), -std::sin(a), rng.uniform(-3, 3), std::sin(a),
                   std::cos(a), rng.uniform(-3, 3), rng.uniform(-0.02, 0.02),
                   rng.uniform(-0.02, 0.02), 1.0}};
    const Model inv = invert_homography(h);
    for (int i = 0; i < 10; ++i) {
      const Point2 p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
      const auto q = project(h, p);
      if (!q) continue;
      const auto back = project(inv, *q);
      REQUIRE(back.has_value());
      CHECK(std::hypot(back->x - p.x, back->y - p.y) < 1e-9);
    }
  }
}

TEST_CASE("count_inliers against an exhaustive residual check") {
  // Four points on y = 2x, two far away.
  const std::vector<Point2> pts = {{0, 0},  {1, 2},  {2, 4},
                                   {-1, -2}, {10, 0}, {0, 10}};
  const auto data = Dataset::from_points(pts);
  const LineEstimator est(0.5);
  const auto model = fit_line({0, 0}, {1, 2});
  REQUIRE(model.has_value());

  int expected = 0;
  for (const auto& p : pts) {
    if (line_residual(*model, p) < est.inlier_threshold()) ++expected;
  }
  CHECK(expected == 4);
  CHECK(count_inliers(est, *model, data) == expected);
}

TEST_CASE("count_inliers at a vanishing threshold keeps exact zeros only") {
  const auto data = Dataset::from_points({{0, 0}, {1, 1}, {2, 2}, {2, 2.5}});
  const LineEstimator est(1e-300);
  const auto model = fit_line({0, 0}, {1, 1});
  CHECK(count_inliers(est, *model, data) == 3);
}

TEST_CASE("count_inliers covers a noiseless collinear dataset") {
  std::vector<Point2> pts;
  for (int i = 0; i < 50; ++i) pts.push_back({double(i), 2.0 * i + 1.0});
  const auto data = Dataset::from_points(pts);
  const LineEstimator est(1.0);
  const auto model = est.fit(data, std::vector<int>{3, 17});
  REQUIRE(model.has_value());
  CHECK(count_inliers(est, *model, data) == 50);
}

TEST_CASE("count_inliers is monotone in the threshold") {
  Rng rng(41);
  std::vector<Point2> pts;
  for (int i = 0; i < 60; ++i) {
    pts.push_back({rng.uniform(-10, 10), rng.uniform(-10, 10)});
  }
  const auto data = Dataset::from_points(pts);
  const auto model = fit_line({0, 0}, {1, 0.5});
  int prev = 0;
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    const LineEstimator est(t);
    const int count = count_inliers(est, *model, data);
    CHECK(count >= prev);
    prev = count;
  }
}

TEST_CASE("dataset rejects non-finite coordinates") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Dataset::from_points({{0, nan}}), std::invalid_argument);
  CHECK_THROWS_AS(Dataset::from_correspondences(
                      {{{0, 0}, {std::numeric_limits<double>::infinity(), 0}}}),
                  std::invalid_argument);
}

TEST_CASE("dataset CSV round trip") {
  const auto data = Dataset::from_points({{0.5, -1.25}, {3, 4}},
                                         std::vector<std::uint8_t>{1, 0});
  const auto back = Dataset::from_csv(data.to_csv());
  CHECK(back.size() == 2);
  CHECK(back.holds_points());
  CHECK(back.points()[0].x == 0.5);
  CHECK(back.points()[1].y == 4.0);
  REQUIRE(back.labels().has_value());
  CHECK((*back.labels())[0] == 1);
  CHECK((*back.labels())[1] == 0);
  CHECK(back.to_csv() == data.to_csv());

  const auto pairs = Dataset::from_correspondences(
      {{{1, 2}, {3, 4}}, {{-1, 0}, {0.125, 9}}});
  const auto back2 = Dataset::from_csv(pairs.to_csv());
  CHECK_FALSE(back2.holds_points());
  CHECK(back2.correspondences()[1].target.x == 0.125);
}

TEST_CASE("dataset CSV accepts headers without labels") {
  const auto d = Dataset::from_csv("x,y\n1,2\n3,4\n");
  CHECK(d.size() == 2);
  CHECK_FALSE(d.labels().has_value());
  CHECK_THROWS_AS(Dataset::from_csv("a,b\n1,2\n"), std::invalid_argument);
}
