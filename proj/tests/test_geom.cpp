#include <cmath>
#include <random>

#include "doctest.h"
#include "hunt/geom.h"

using namespace hunt;

namespace {

// Brute-force oracle: minimize |p - q| over dense samples of the segment.
double brute_dist_point_segment(Point p, Point a, Point b, int samples) {
  double best = (p - a).norm();
  for (int i = 0; i <= samples; ++i) {
    Point q = a + (b - a) * (static_cast<double>(i) / samples);
    best = std::min(best, (p - q).norm());
  }
  return best;
}

// Rotation-count oracle: step a ray clockwise from p1 and count steps until
// it aligns with the target direction.
bool brute_angle_contains(const AngularHint& hint, Point p) {
  Vec2 u = (p - hint.vertex()).normalized();
  const int steps = 1 << 16;
  const double step = kTwoPi / steps;
  double target = std::atan2(u.y, u.x);
  double start = std::atan2(hint.p1().y, hint.p1().x);
  int count = 0;
  double a = start;
  while (count <= steps) {
    double diff = std::remainder(a - target, kTwoPi);
    if (std::abs(diff) <= step / 2) break;
    a -= step;
    ++count;
  }
  return count * step <= hint.size() + step;
}

}  // namespace

TEST_CASE("segment distance: degenerate, interior foot, and endpoint cases") {
  CHECK(dist_point_segment({3, 4}, {0, 0}, {0, 0}) == doctest::Approx(5.0));
  CHECK(dist_point_segment({5, 1}, {0, 0}, {10, 0}) == doctest::Approx(1.0));
  // Expected value sqrt(2), confirmed by the dense-sampling oracle.
  double oracle = brute_dist_point_segment({-1, 1}, {0, 0}, {10, 0}, 1000000);
  double got = dist_point_segment({-1, 1}, {0, 0}, {10, 0});
  CHECK(got == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(got - oracle) < 1e-6);
}

TEST_CASE("segment distance rejects non-finite input") {
  CHECK_THROWS_AS(dist_point_segment({std::nan(""), 0}, {0, 0}, {1, 0}), Error);
}

TEST_CASE("projection onto a line") {
  Line x_axis({0, 0}, {1, 0});
  Point pr = project_point_line({3, 7}, x_axis);
  CHECK(pr.x == doctest::Approx(3.0));
  CHECK(pr.y == doctest::Approx(0.0));

  Line diag({0, 0}, {1, 1});
  Point on = project_point_line({2, 2}, diag);
  CHECK(almost_equal(on, {2, 2}, 1e-12));

  // Expected (1,1): the closest point of y=x to (2,0), confirmed by a dense
  // parameter sweep.
  Point got = project_point_line({2, 0}, diag);
  double best = 1e300;
  Point best_q;
  for (int i = -5000; i <= 5000; ++i) {
    Point q{i * 1e-3, i * 1e-3};
    double d = (Point{2, 0} - q).norm();
    if (d < best) {
      best = d;
      best_q = q;
    }
  }
  CHECK(almost_equal(got, {1, 1}, 1e-9));
  CHECK(almost_equal(got, best_q, 2e-3));

  // Residual is orthogonal to the line and the image lies on it.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-50, 50);
  for (int t = 0; t < 200; ++t) {
    Line l(Point{coord(rng), coord(rng)}, Vec2{coord(rng), coord(rng) + 0.1});
    Point p{coord(rng), coord(rng)};
    Point q = project_point_line(p, l);
    CHECK(l.contains(q));
    CHECK(std::abs(dot(p - q, l.direction())) < 1e-7);
  }
}

TEST_CASE("line intersections and the parallel value") {
  Line x_axis({0, 0}, {1, 0});
  Line y_axis({0, 0}, {0, 1});
  auto o = line_intersection(x_axis, y_axis);
  REQUIRE(o.has_value());
  CHECK(almost_equal(*o, {0, 0}, 1e-12));

  // y = x meets y = -x + 2 at (1, 1) by substitution.
  auto p = line_intersection(Line({0, 0}, {1, 1}), Line({0, 2}, {1, -1}));
  REQUIRE(p.has_value());
  CHECK(almost_equal(*p, {1, 1}, 1e-12));

  CHECK_FALSE(line_intersection(Line({0, 1}, {1, 0}), Line({0, 3}, {1, 0})).has_value());
  // Coincident lines also report parallel.
  CHECK_FALSE(line_intersection(Line({0, 1}, {1, 0}), Line({5, 1}, {-1, 0})).has_value());
}

TEST_CASE("half-plane containment includes the boundary") {
  HalfPlane right(Line({0, 0}, {0, 1}), Side::right);
  CHECK(right.contains({1, 0}));
  CHECK(right.contains({0, 5}));
  CHECK_FALSE(right.contains({-1e-6, 0}));

  HalfPlane up(Line({0, 0}, {1, 0}), Side::up);
  CHECK_FALSE(up.contains({0, -0.001}));
  CHECK(up.contains({0, 0}));
}

TEST_CASE("half-plane side labels respect the horizontal rule") {
  CHECK_THROWS_AS(HalfPlane(Line({0, 0}, {1, 0}), Side::right), Error);
  CHECK_THROWS_AS(HalfPlane(Line({0, 0}, {0, 1}), Side::up), Error);
}

TEST_CASE("angle containment: half-turn sweep and the vertex case") {
  // Sweeping clockwise from west passes through north and ends east: the
  // upper half-plane.
  AngularHint upper({0, 0}, {-1, 0}, kPi);
  CHECK(upper.contains({0, 3}));
  CHECK_FALSE(upper.contains({0, -3}));
  CHECK(upper.contains({5, 0}));   // closing ray included
  CHECK(upper.contains({-5, 0}));  // opening ray included
  CHECK_THROWS_AS(upper.contains({0, 0}), Error);
  CHECK(upper.contains_or_vertex({0, 0}));
}

TEST_CASE("angle containment agrees with the rotation-count oracle") {
  AngularHint hint({0, 0}, {0, 1}, 3 * kPi / 2);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int t = 0; t < 100; ++t) {
    Point p = dir_from_angle(ang(rng)) * 10.0;
    double off = cw_offset(hint.p1(), (p - hint.vertex()).normalized());
    if (std::min({off, std::abs(off - hint.size()), kTwoPi - off}) < 1e-3) continue;
    CHECK(hint.contains(p) == brute_angle_contains(hint, p));
  }
}

TEST_CASE("quarter-turn rotation and vertical reflection are exact") {
  CHECK(almost_equal(rotate_about({1, 0}, {0, 0}, 1), {0, 1}, 0.0));
  CHECK(almost_equal(reflect_vertical({3, 2}, 0.0), {-3, 2}, 0.0));

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coord(-100, 100);
  for (int t = 0; t < 1000; ++t) {
    Point p{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
    int q = t % 4;
    CHECK(almost_equal(rotate_about(rotate_about(p, c, q), c, (4 - q) % 4), p, 1e-12));
    double ax = coord(rng);
    CHECK(almost_equal(reflect_vertical(reflect_vertical(p, ax), ax), p,
                       1e-12 * (1.0 + p.norm() + std::abs(ax))));
  }
}

TEST_CASE("half-plane to hint and back") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coord(-20, 20);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int t = 0; t < 300; ++t) {
    HalfPlane h = HalfPlane::from_anchor_normal({coord(rng), coord(rng)}, dir_from_angle(ang(rng)));
    AngularHint hint = halfplane_to_hint(h);
    CHECK(hint.size() == kPi);
    HalfPlane back = hint_to_halfplane(hint);
    CHECK(back.side() == h.side());
    CHECK(almost_equal(back.inward_normal(), h.inward_normal(), 1e-12));
    // Agreement on random probes.
    for (int s = 0; s < 10; ++s) {
      Point p{coord(rng), coord(rng)};
      if (std::abs(h.signed_distance(p)) < 1e-6) continue;
      CHECK(h.contains(p) == hint.contains_or_vertex(p));
    }
  }
}

TEST_CASE("clockwise line-angle arcs") {
  // Arc from 3*pi/4 down to pi/4: contains pi/2, not the excluded end.
  CHECK(cw_line_arc_contains(3 * kPi / 4, kPi / 4, kPi / 2));
  CHECK(cw_line_arc_contains(3 * kPi / 4, kPi / 4, 3 * kPi / 4));
  CHECK_FALSE(cw_line_arc_contains(3 * kPi / 4, kPi / 4, kPi / 4));
  // Wrapping arc from pi/4 down through 0 to 7*pi/8.
  CHECK(cw_line_arc_contains(kPi / 4, 7 * kPi / 8, 0.0));
  CHECK(cw_line_arc_contains(kPi / 4, 7 * kPi / 8, 0.95 * kPi));
  CHECK_FALSE(cw_line_arc_contains(kPi / 4, 7 * kPi / 8, kPi / 2));
  // Empty arc.
  CHECK_FALSE(cw_line_arc_contains(kPi / 3, kPi / 3, kPi / 3));
}

TEST_CASE("rectangle types validate their extents") {
  CHECK_THROWS_AS(StraightRect(0, 0, 0, 1), Error);
  StraightRect r(-2, 4, -1, 5);
  CHECK(r.width() == doctest::Approx(6));
  CHECK(r.height() == doctest::Approx(6));
  CHECK(almost_equal(r.center(), {1, 2}, 1e-12));
  CHECK(r.perimeter() == doctest::Approx(24));

  OrientedRect o = OrientedRect::from_corners({0, 0}, {2, 2}, {1, 3}, {-1, 1});
  CHECK(o.min_side() == doctest::Approx(std::sqrt(2.0)));
  CHECK(o.max_side() == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK(o.contains({0.5, 1.5}, 1e-9));
  CHECK_FALSE(o.contains({2, 0}, 1e-9));
  CHECK_THROWS_AS(OrientedRect::from_corners({0, 0}, {2, 2}, {1, 3}, {-4, 1}), Error);
}

TEST_CASE("segment distance vanishes exactly on the segment") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> coord(-50, 50);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 300; ++t) {
    Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    Point on = a + (b - a) * unit(rng);
    CHECK(dist_point_segment(on, a, b) <= 1e-9);
    Vec2 off_dir = (b - a).norm() > 0 ? (b - a).normalized().perp() : Vec2{1, 0};
    CHECK(dist_point_segment(on + off_dir * 0.5, a, b) > 1e-9);
  }
}
