#include <cmath>
#include <random>

#include "doctest.h"
#include "hunt/hints.h"
#include "hunt/mosaic.h"

using namespace hunt;

namespace {

double mosaic_cost_bound(int i, long long k) {
  double fourk = std::pow(4.0, static_cast<double>(k));
  double exponent = i * (3.0 + std::log(fourk - 1.0) / std::log(fourk)) / 2.0 + 2.0 * k + 8.0;
  return std::exp2(exponent);
}

}  // namespace

TEST_CASE("paint state: quarters, idempotence, and full collapse") {
  StraightRect base(-2, 2, -2, 2);
  PaintState ps(base, 6);
  CHECK(ps.white_area() == doctest::Approx(16.0));

  ps.paint_black({1, 0, 0});
  CHECK(ps.white_area() == doctest::Approx(12.0));  // three quarters left
  ps.paint_black({1, 0, 0});
  CHECK(ps.white_area() == doctest::Approx(12.0));  // idempotent

  for (std::uint64_t c = 0; c < 4; ++c) {
    for (std::uint64_t r = 0; r < 4; ++r) ps.paint_black({2, c, r});
  }
  CHECK(ps.white_area() == doctest::Approx(0.0));
  CHECK(ps.state({0, 0, 0}) == TileState::black);
  CHECK(ps.max_mixed_depth() == -1);  // collapsed to a single black node
}

TEST_CASE("paint state: deep paints recollapse ancestors and track mixing") {
  StraightRect base(0, 8, 0, 8);
  PaintState ps(base, 8);
  ps.paint_black({3, 5, 2});
  CHECK(ps.max_mixed_depth() == 2);
  CHECK(ps.state({3, 5, 2}) == TileState::black);
  CHECK(ps.state({0, 0, 0}) == TileState::mixed);
  CHECK(ps.white_area() == doctest::Approx(64.0 - 1.0));
  CHECK(ps.white_tiles(3).size() == 63);
  CHECK_THROWS_AS(ps.paint_black({9, 0, 0}), Error);

  // Painting the three sibling tiles collapses the parent.
  ps.paint_black({3, 4, 2});
  ps.paint_black({3, 4, 3});
  ps.paint_black({3, 5, 3});
  CHECK(ps.state({2, 2, 1}) == TileState::black);
  CHECK(ps.max_mixed_depth() == 1);
}

TEST_CASE("mosaic on an empty square: full passes, scan, and return home") {
  Point z{1e6, 1e6};  // far outside every phase square
  BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::random_honest, 5);
  Episode ep(z, &adv);
  int k = empirical_index(3 * kPi / 2);
  MosaicReport mr = mosaic(ep, 6, k, {});
  CHECK_FALSE(mr.found);
  CHECK(mr.index_max == k);
  CHECK(mr.final_scan_ran);
  CHECK(mr.passes == mosaic_pass_count(6, k));
  CHECK(almost_equal(ep.position(), {0, 0}, 1e-9));
  CHECK(mr.paint_gaps == 0);
  CHECK(mr.cost <= mosaic_cost_bound(6, k));
  // Painting happened in every pass.
  for (int painted : mr.tiles_painted) CHECK(painted > 0);
}

TEST_CASE("mosaic finds a treasure inside the square") {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int k = empirical_index(3 * kPi / 2);
  for (int t = 0; t < 200; ++t) {
    double half = 8.0;  // i = 4
    Point z{(unit(rng) * 2 - 1) * half * 0.95, (unit(rng) * 2 - 1) * half * 0.95};
    BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::random_honest, t);
    Episode ep(z, &adv);
    if (ep.found()) continue;
    MosaicReport mr = mosaic(ep, 4, k, {});
    CHECK(mr.found);
  }
}

TEST_CASE("per-pass white area shrinks at least by the painting fraction") {
  for (int i : {6, 8}) {
    for (long long k : {1ll, 2ll}) {
      Point z{1e6, -1e6};
      BoundedAngleAdversary adv(z, 5 * kPi / 4, BoundedAngleAdversary::Strategy::random_honest,
                                static_cast<std::uint64_t>(i * 10 + k));
      Episode ep(z, &adv);
      MosaicReport mr = mosaic(ep, i, k, {});
      if (mr.index_max != k) continue;  // painting was disabled mid-call
      double prev = std::ldexp(1.0, 2 * i);
      for (double after : mr.white_area_after_pass) {
        CHECK(after <= prev * (1.0 - std::pow(4.0, -static_cast<double>(k))) + 1e-9);
        prev = after;
      }
    }
  }
}

TEST_CASE("quadtree purity after each pass at the pass depth") {
  // Structural variant of the black-or-white guarantee: after the call, no
  // mixed node survives at the finest painted depth.
  Point z{1e5, 1e5};
  BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::random_honest, 3);
  Episode ep(z, &adv);
  int k = empirical_index(3 * kPi / 2);
  MosaicReport mr = mosaic(ep, 8, k, {});
  CHECK(mr.index_max == k);
  // The report's painted rectangles are all at least one finest tile big.
  double finest_side = std::ldexp(1.0, 8) / std::ldexp(1.0, mosaic_pass_count(8, k) * k);
  for (const StraightRect& r : mr.black_rects) {
    CHECK(r.width() >= finest_side - 1e-9);
  }
}

TEST_CASE("tile budget rejects unenumerable depths before any movement") {
  Point z{10, 10};
  BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::edge_worst, 0);
  Episode ep(z, &adv);
  CHECK_THROWS_AS(mosaic(ep, 4, 24, {}), Error);
  try {
    mosaic(ep, 4, 24, {});
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::tile_budget_exceeded);
  }
  CHECK(ep.trajectory().waypoints.size() == 1);  // never moved
  CHECK(ep.ledger().total == 0.0);
}

TEST_CASE("bounded hunt: detection, stable index, few repeats per phase") {
  Point z{14, -11};
  BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::edge_worst, 1);
  Episode ep(z, &adv);
  BoundedHuntReport rep = treasure_hunt_bounded(ep);
  CHECK(rep.found);
  int k = empirical_index(3 * kPi / 2);
  for (int reps : rep.repeats_per_phase) CHECK(reps <= std::max(2, k));
  // Fixed hint size: the per-hint index is constant, so after the first
  // phase stabilizes the repeat loop runs a single call per phase.
  for (std::size_t ph = 1; ph + 1 < rep.repeats_per_phase.size(); ++ph) {
    CHECK(rep.repeats_per_phase[ph] <= 2);
  }
}

TEST_CASE("bounded hunt copes with hints close to a full turn") {
  Point z{9, 5};
  BoundedAngleAdversary adv(z, 15 * kPi / 8, BoundedAngleAdversary::Strategy::random_honest, 4);
  Episode ep(z, &adv);
  BoundedHuntReport rep = treasure_hunt_bounded(ep);
  CHECK(rep.found);
}

TEST_CASE("exact-index arithmetic trips the budget at the formula depth") {
  // The exact per-hint index for beta = 3*pi/2 is 24; the finest tiling
  // for any phase then needs 4^24 leaves.
  CHECK(psi_of(3 * kPi / 2) == 24);
  Point z{5, 5};
  BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::edge_worst, 0);
  Episode ep(z, &adv);
  BoundedHuntOptions opt;
  opt.mosaic.mode = IndexMode::exact_formula;
  CHECK_THROWS_AS(treasure_hunt_bounded(ep, opt), Error);
}

TEST_CASE("bounded hunt finishes by the phase whose square holds the treasure") {
  std::mt19937_64 rng(98);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (double d : {3.0, 20.0, 150.0}) {
    Point z = dir_from_angle(ang(rng)) * d;
    BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::edge_worst, 12);
    Episode ep(z, &adv);
    BoundedHuntReport rep = treasure_hunt_bounded(ep);
    REQUIRE(rep.found);
    CHECK(rep.phases <= static_cast<int>(std::ceil(std::log2(d))) + 1);
  }
}

TEST_CASE("painting stops permanently once a hint needs a deeper index") {
  // Depth 1 can never serve a hint bounded away from a half-turn, so the
  // first hint raises the index and every pass paints nothing.
  Point z{1e5, 0};
  BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::random_honest, 9);
  Episode ep(z, &adv);
  MosaicReport mr = mosaic(ep, 8, 1, {});
  CHECK(mr.index_max == empirical_index(3 * kPi / 2));
  CHECK_FALSE(mr.final_scan_ran);
  for (int painted : mr.tiles_painted) CHECK(painted == 0);
  CHECK(mr.white_area == std::ldexp(1.0, 16));
  CHECK(almost_equal(ep.position(), {0, 0}, 1e-9));  // still walks home
}
