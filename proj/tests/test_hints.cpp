#include <cmath>
#include <random>

#include "doctest.h"
#include "hunt/hints.h"

using namespace hunt;

TEST_CASE("perpendicular half-plane: boundary normal points at the treasure") {
  HalfPlaneAdversary adv({10, 0}, HalfPlaneAdversary::Strategy::perpendicular_worst);
  HalfPlane h = adv.query_halfplane({0, 0});
  CHECK(h.boundary().vertical());
  CHECK(h.side() == Side::right);
  CHECK(almost_equal(h.boundary().anchor(), {0, 0}, 0.0));
  CHECK(h.contains({10, 0}));
}

TEST_CASE("fixed horizontal boundary with the treasure above") {
  HalfPlaneAdversary adv({0, 5}, HalfPlaneAdversary::Strategy::fixed_direction, 0, 0.0);
  HalfPlane h = adv.query_halfplane({0, 0});
  CHECK(h.boundary().horizontal());
  CHECK(h.side() == Side::up);
}

TEST_CASE("query at the treasure itself returns the fixed honest reply") {
  HalfPlaneAdversary adv({2, 3}, HalfPlaneAdversary::Strategy::perpendicular_worst);
  HalfPlane h = adv.query_halfplane({2, 3});
  CHECK(h.boundary().horizontal());
  CHECK(h.side() == Side::up);
}

TEST_CASE("half-plane honesty over random positions and treasures") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coord(-200, 200);
  for (int t = 0; t < 1000; ++t) {
    Point z{coord(rng), coord(rng)}, pos{coord(rng), coord(rng)};
    HalfPlaneAdversary adv(z, HalfPlaneAdversary::Strategy::random_honest, t);
    AngularHint h = adv.query(pos);
    CHECK(h.contains_or_vertex(z));
    CHECK(h.size() == kPi);
    CHECK(almost_equal(h.vertex(), pos, 0.0));
  }
}

TEST_CASE("bounded hints: worst placement puts the treasure on the opening ray") {
  BoundedAngleAdversary adv({7, 0}, 3 * kPi / 2, BoundedAngleAdversary::Strategy::edge_worst);
  AngularHint h = adv.query({0, 0});
  CHECK(h.size() == doctest::Approx(3 * kPi / 2));
  CHECK(almost_equal(h.p1(), {1, 0}, 1e-12));
  CHECK(h.contains({7, 0}));
  // The excluded sliver sits counterclockwise of the treasure ray.
  CHECK_FALSE(h.contains(dir_from_angle(kPi / 8) * 5.0));
}

TEST_CASE("bounded hints near a full turn leave a thin excluded sliver") {
  double beta = kTwoPi - 0.01;
  BoundedAngleAdversary adv({3, 3}, beta, BoundedAngleAdversary::Strategy::edge_worst);
  AngularHint h = adv.query({0, 0});
  CHECK(h.size() == beta);
  CHECK(h.complement().size() == doctest::Approx(0.01));
  CHECK(h.contains({3, 3}));
}

TEST_CASE("bounded honesty and exact sizes over random queries") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> coord(-100, 100);
  double beta = 5 * kPi / 4;
  for (int t = 0; t < 1000; ++t) {
    Point z{coord(rng), coord(rng)}, pos{coord(rng), coord(rng)};
    BoundedAngleAdversary adv(z, beta, BoundedAngleAdversary::Strategy::random_honest, t);
    AngularHint h = adv.query(pos);
    CHECK(h.size() == beta);
    CHECK(h.contains_or_vertex(z));
  }
}

TEST_CASE("bounded adversary rejects sizes outside (pi, 2*pi)") {
  CHECK_THROWS_AS(
      BoundedAngleAdversary({1, 1}, kPi, BoundedAngleAdversary::Strategy::edge_worst),
      Error);
  CHECK_THROWS_AS(
      BoundedAngleAdversary({1, 1}, kTwoPi, BoundedAngleAdversary::Strategy::edge_worst),
      Error);
}

TEST_CASE("forbidden adversary: sizes 2^-i, disjoint from the disc when outside") {
  double d_radius = 8.0;
  ForbiddenAngleAdversary adv(d_radius, 1);
  AngularHint first = adv.query({2 * d_radius, 0});
  CHECK(kTwoPi - first.size() == doctest::Approx(0.5));
  CHECK(adv.call_count() == 1);

  // The forbidden cone of an outside query never meets the disc.
  const ForbiddenCone& fc = adv.transcript().back();
  for (int s = 0; s < 500; ++s) {
    double a = s * kTwoPi / 500;
    for (double r : {0.2, 0.7, 0.999}) {
      Point q = dir_from_angle(a) * (r * d_radius);
      CHECK_FALSE(fc.cone().contains_or_vertex(q));
    }
  }

  for (int i = 2; i <= 10; ++i) {
    AngularHint h = adv.query({2 * d_radius + i, 0.0});
    CHECK(kTwoPi - h.size() == doctest::Approx(std::ldexp(1.0, -i)));
  }
}

TEST_CASE("forbidden adversary is deterministic per seed") {
  ForbiddenAngleAdversary a(10.0, 42), b(10.0, 42);
  for (int t = 0; t < 8; ++t) {
    Point pos{t * 1.5 - 5.0, 2.0};
    AngularHint ha = a.query(pos), hb = b.query(pos);
    CHECK(almost_equal(ha.p1(), hb.p1(), 0.0));
    CHECK(ha.size() == hb.size());
  }
}
