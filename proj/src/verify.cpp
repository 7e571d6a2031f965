#include "hunt/verify.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>

#include "hunt/baseline.h"
#include "hunt/hints.h"
#include "hunt/mosaic.h"
#include "hunt/reduce.h"
#include "hunt/scan.h"
#include "hunt/simulator.h"
#include "hunt/tiling.h"

namespace hunt {

namespace {

struct Suite {
  std::string module;
  std::vector<CheckResult> results;

  void check(const std::string& name, bool pass, double measured, double bound,
             const std::string& detail = "") {
    results.push_back({module, name, pass, measured, bound, detail});
  }
  // measured <= bound
  void check_le(const std::string& name, double measured, double bound,
                const std::string& detail = "") {
    check(name, measured <= bound, measured, bound, detail);
  }
};

}  // namespace

// --- coverage oracle ---

double max_coverage_distance(const std::vector<Point>& polyline, const OrientedRect& rect,
                             double pitch) {
  if (polyline.size() < 2) {
    throw Error(ErrorCode::precondition_violated, "coverage needs a polyline");
  }
  // Dense unit-cell grid over everything involved; each cell lists the
  // segments whose dilated bounding box touches it.
  const double cell = 1.0;
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_y;
  auto grow = [&](Point p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (Point p : polyline) grow(p);
  for (Point p : rect.corners()) grow(p);
  const long long gw = static_cast<long long>(std::floor((max_x - min_x) / cell)) + 3;
  const long long gh = static_cast<long long>(std::floor((max_y - min_y) / cell)) + 3;
  auto cx = [&](double x) {
    return std::clamp(static_cast<long long>(std::floor((x - min_x) / cell)) + 1, 0ll, gw - 1);
  };
  auto cy = [&](double y) {
    return std::clamp(static_cast<long long>(std::floor((y - min_y) / cell)) + 1, 0ll, gh - 1);
  };
  std::vector<std::vector<std::uint32_t>> buckets(static_cast<std::size_t>(gw * gh));
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    Point a = polyline[i - 1], b = polyline[i];
    long long x0 = cx(std::min(a.x, b.x) - cell), x1 = cx(std::max(a.x, b.x) + cell);
    long long y0 = cy(std::min(a.y, b.y) - cell), y1 = cy(std::max(a.y, b.y) + cell);
    for (long long gx = x0; gx <= x1; ++gx) {
      for (long long gy = y0; gy <= y1; ++gy) {
        buckets[static_cast<std::size_t>(gy * gw + gx)].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  auto dist_at = [&](Point p) {
    double best = std::numeric_limits<double>::infinity();
    long long pcx = cx(p.x), pcy = cy(p.y);
    for (long long ring = 1; ring < gw + gh; ++ring) {
      long long x0 = std::max(0ll, pcx - ring), x1 = std::min(gw - 1, pcx + ring);
      long long y0 = std::max(0ll, pcy - ring), y1 = std::min(gh - 1, pcy + ring);
      for (long long gx = x0; gx <= x1; ++gx) {
        for (long long gy = y0; gy <= y1; ++gy) {
          bool on_ring = std::max(std::abs(gx - pcx), std::abs(gy - pcy)) == ring;
          if (!on_ring && ring != 1) continue;
          for (std::uint32_t i : buckets[static_cast<std::size_t>(gy * gw + gx)]) {
            best = std::min(best, dist_point_segment(p, polyline[i - 1], polyline[i]));
          }
        }
      }
      // Unscanned cells sit at Chebyshev ring >= ring + 1, hence at distance
      // >= ring * cell from p.
      if (best <= cell * static_cast<double>(ring)) break;
    }
    return best;
  };

  double worst = 0.0;
  int nu = std::max(1, static_cast<int>(std::ceil(rect.side_u() / pitch)));
  int nv = std::max(1, static_cast<int>(std::ceil(rect.side_v() / pitch)));
  for (int iu = 0; iu <= nu; ++iu) {
    for (int iv = 0; iv <= nv; ++iv) {
      Vec2 local{-rect.half_u() + rect.side_u() * iu / nu,
                 -rect.half_v() + rect.side_v() * iv / nv};
      worst = std::max(worst, dist_at(rect.to_world(local)));
    }
  }
  return worst;
}

bool polyline_covers_rect(const std::vector<Point>& polyline, const OrientedRect& rect,
                          double pitch, double radius) {
  if (polyline.size() < 2) {
    throw Error(ErrorCode::precondition_violated, "coverage needs a polyline");
  }
  // Same dense grid as max_coverage_distance, but each sample point stops at
  // the first segment within `radius`.
  const double cell = 1.0;
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_y;
  auto grow = [&](Point p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (Point p : polyline) grow(p);
  for (Point p : rect.corners()) grow(p);
  const long long gw = static_cast<long long>(std::floor((max_x - min_x) / cell)) + 3;
  const long long gh = static_cast<long long>(std::floor((max_y - min_y) / cell)) + 3;
  auto cx = [&](double x) {
    return std::clamp(static_cast<long long>(std::floor((x - min_x) / cell)) + 1, 0ll, gw - 1);
  };
  auto cy = [&](double y) {
    return std::clamp(static_cast<long long>(std::floor((y - min_y) / cell)) + 1, 0ll, gh - 1);
  };
  // Dilating each segment box by radius + cell guarantees that any segment
  // within `radius` of a point is indexed in the point's own cell.
  const double dilate = radius + cell;
  std::vector<std::vector<std::uint32_t>> buckets(static_cast<std::size_t>(gw * gh));
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    Point a = polyline[i - 1], b = polyline[i];
    long long x0 = cx(std::min(a.x, b.x) - dilate), x1 = cx(std::max(a.x, b.x) + dilate);
    long long y0 = cy(std::min(a.y, b.y) - dilate), y1 = cy(std::max(a.y, b.y) + dilate);
    for (long long gx = x0; gx <= x1; ++gx) {
      for (long long gy = y0; gy <= y1; ++gy) {
        buckets[static_cast<std::size_t>(gy * gw + gx)].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  auto covered = [&](Point p) {
    const double r2 = radius * radius;
    for (std::uint32_t i : buckets[static_cast<std::size_t>(cy(p.y) * gw + cx(p.x))]) {
      Point a = polyline[i - 1], b = polyline[i];
      Vec2 ab = b - a;
      double len2 = ab.squared_norm();
      double t = len2 == 0.0 ? 0.0 : std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
      if ((p - (a + ab * t)).squared_norm() <= r2) return true;
    }
    return false;
  };

  int nu = std::max(1, static_cast<int>(std::ceil(rect.side_u() / pitch)));
  int nv = std::max(1, static_cast<int>(std::ceil(rect.side_v() / pitch)));
  for (int iu = 0; iu <= nu; ++iu) {
    for (int iv = 0; iv <= nv; ++iv) {
      Vec2 local{-rect.half_u() + rect.side_u() * iu / nu,
                 -rect.half_v() + rect.side_v() * iv / nv};
      if (!covered(rect.to_world(local))) return false;
    }
  }
  return true;
}

// --- geom ---

std::vector<CheckResult> verify_geom() {
  Suite s{"geom", {}};
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);

  bool canon_ok = true;
  for (int t = 0; t < 2000; ++t) {
    Line l(Point{coord(rng), coord(rng)}, dir_from_angle(ang(rng)));
    Line l2(l.anchor(), l.direction());
    auto f1 = l.canonical_form(), f2 = l2.canonical_form();
    if (f1 != f2 || l.angle() < 0.0 || l.angle() >= kPi) canon_ok = false;
  }
  s.check("line canonicalization idempotent, angle in [0,pi)", canon_ok, canon_ok ? 1 : 0, 1);

  bool cover_ok = true, both_ok = true;
  for (int t = 0; t < 2000; ++t) {
    HalfPlane h = HalfPlane::from_anchor_normal({coord(rng), coord(rng)},
                                                dir_from_angle(ang(rng)));
    Point p{coord(rng), coord(rng)};
    bool a = h.contains(p), b = h.complement().contains(p);
    if (!(a || b)) cover_ok = false;
    if (a && b && std::abs(h.signed_distance(p)) > eps()) both_ok = false;
  }
  s.check("half-plane union with complement covers the plane", cover_ok, cover_ok ? 1 : 0, 1);
  s.check("half-plane overlap with complement only within eps of boundary", both_ok,
          both_ok ? 1 : 0, 1);

  bool xor_ok = true;
  for (int t = 0; t < 2000; ++t) {
    AngularHint hint({coord(rng), coord(rng)}, dir_from_angle(ang(rng)),
                     std::uniform_real_distribution<double>(0.1, kTwoPi - 0.1)(rng));
    Point p = hint.vertex() + dir_from_angle(ang(rng)) * 5.0;
    double off = cw_offset(hint.p1(), (p - hint.vertex()).normalized());
    bool near_ray = std::min({off, std::abs(off - hint.size()), kTwoPi - off}) < 1e-6;
    if (near_ray) continue;
    if (hint.contains(p) == hint.complement().contains(p)) xor_ok = false;
  }
  s.check("angle containment xor complement off the boundary rays", xor_ok, xor_ok ? 1 : 0, 1);

  bool dist_ok = true;
  for (int t = 0; t < 2000; ++t) {
    Point p{coord(rng), coord(rng)}, a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    if (std::abs(dist_point_segment(p, a, b) - dist_point_segment(p, b, a)) > 1e-12) {
      dist_ok = false;
    }
  }
  s.check("segment distance symmetric in the endpoints", dist_ok, dist_ok ? 1 : 0, 1);

  bool rot_ok = true;
  for (int t = 0; t < 1000; ++t) {
    Point p{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
    int q = t % 4;
    Point back = rotate_about(rotate_about(p, c, q), c, (4 - q) % 4);
    if (!almost_equal(back, p, 1e-12 * (1.0 + p.norm()))) rot_ok = false;
  }
  s.check("quarter-turn rotation round-trip is the identity", rot_ok, rot_ok ? 1 : 0, 1);
  return s.results;
}

// --- hints ---

std::vector<CheckResult> verify_hints() {
  Suite s{"hints", {}};
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> coord(-50.0, 50.0);

  bool honest = true, size_ok = true;
  for (int t = 0; t < 1000; ++t) {
    Point z{coord(rng), coord(rng)}, pos{coord(rng), coord(rng)};
    HalfPlaneAdversary perp(z, HalfPlaneAdversary::Strategy::perpendicular_worst);
    HalfPlaneAdversary rnd(z, HalfPlaneAdversary::Strategy::random_honest, t);
    for (HalfPlaneAdversary* adv : {&perp, &rnd}) {
      AngularHint h = adv->query(pos);
      if (!h.contains_or_vertex(z)) honest = false;
      if (std::abs(h.size() - kPi) > eps()) size_ok = false;
    }
    BoundedAngleAdversary bnd(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::random_honest, t);
    AngularHint h = bnd.query(pos);
    if (!h.contains_or_vertex(z)) honest = false;
    if (h.size() != 3 * kPi / 2) size_ok = false;
  }
  s.check("every adversary reply contains the treasure", honest, honest ? 1 : 0, 1);
  s.check("reply sizes match the declared bound exactly", size_ok, size_ok ? 1 : 0, 1);

  bool det_ok = true;
  for (int t = 0; t < 20; ++t) {
    HalfPlaneAdversary a1({3, 4}, HalfPlaneAdversary::Strategy::random_honest, 77);
    HalfPlaneAdversary a2({3, 4}, HalfPlaneAdversary::Strategy::random_honest, 77);
    for (int q = 0; q < 10; ++q) {
      Point pos{coord(rng), coord(rng)};
      AngularHint h1 = a1.query(pos), h2 = a2.query(pos);
      if (!almost_equal(h1.p1(), h2.p1(), 0.0) || h1.size() != h2.size()) det_ok = false;
    }
  }
  s.check("same seed and query sequence give identical replies", det_ok, det_ok ? 1 : 0, 1);

  ForbiddenAngleAdversary forb(10.0, 5);
  bool sizes_geometric = true;
  double sum = 0.0;
  for (int i = 1; i <= 20; ++i) {
    AngularHint h = forb.query({25.0 + i, 0.0});
    double forbidden = kTwoPi - h.size();
    if (std::abs(forbidden - std::ldexp(1.0, -i)) > 1e-12) sizes_geometric = false;
    sum += forbidden;
  }
  s.check("forbidden sizes follow the geometric sequence 2^-i", sizes_geometric,
          sizes_geometric ? 1 : 0, 1);
  s.check_le("sum of forbidden sizes stays below 1", sum, 1.0);
  return s.results;
}

// --- simulator ---

std::vector<CheckResult> verify_simulator() {
  Suite s{"simulator", {}};
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> coord(-30.0, 30.0);

  bool additive = true;
  for (int t = 0; t < 200; ++t) {
    Episode ep(std::nullopt, nullptr);
    double expect = 0.0;
    Point prev{0, 0};
    for (int m = 0; m < 20; ++m) {
      Point q{coord(rng), coord(rng)};
      ep.move_to(q);
      expect += (q - prev).norm();
      prev = q;
    }
    if (std::abs(ep.ledger().total - expect) > 1e-9 * (1.0 + expect)) additive = false;
  }
  s.check("ledger total equals the sum of segment lengths", additive, additive ? 1 : 0, 1);

  // Detection agrees with a dense point-to-segment sweep.
  bool detect_ok = true;
  double worst_gap = 0.0;
  for (int t = 0; t < 300; ++t) {
    Point z{coord(rng), coord(rng)};
    std::vector<Point> path{{0, 0}};
    for (int m = 0; m < 8; ++m) path.push_back({coord(rng), coord(rng)});
    Episode ep(z, nullptr);
    for (std::size_t i = 1; i < path.size() && !ep.halted(); ++i) ep.move_to(path[i]);

    bool brute_found = false;
    double brute_cost = 0.0, acc = 0.0;
    for (std::size_t i = 1; i < path.size() && !brute_found; ++i) {
      Point a = path[i - 1], b = path[i];
      double len = (b - a).norm();
      const int steps = 4000;
      for (int k = 0; k <= steps; ++k) {
        Point q = a + (b - a) * (static_cast<double>(k) / steps);
        if ((q - z).norm() <= kDetectionRadius) {
          brute_found = true;
          brute_cost = acc + len * k / steps;
          break;
        }
      }
      acc += len;
    }
    if (z.norm() <= kDetectionRadius) {
      brute_found = true;
      brute_cost = 0.0;
    }
    if (ep.found() != brute_found) {
      // The dense sweep can miss only tangential grazes; accept those.
      if (!ep.found()) detect_ok = false;
    } else if (brute_found) {
      worst_gap = std::max(worst_gap,
                           std::abs(*ep.ledger().cost_at_detection - brute_cost));
    }
  }
  s.check("continuous detection never misses the dense-sweep oracle", detect_ok,
          detect_ok ? 1 : 0, 1);
  s.check_le("detection cost gap against the dense sweep", worst_gap, 0.05);

  bool mono_ok = true;
  for (int t = 1; t < 50; ++t) {
    double d1 = 2.0 + t * 0.37, d2 = d1 + 1.0;
    Episode e1(Point{d1, 0.0}, nullptr), e2(Point{d2, 0.0}, nullptr);
    e1.move_to({200, 0});
    e2.move_to({200, 0});
    if (!(*e1.ledger().cost_at_detection <= *e2.ledger().cost_at_detection)) mono_ok = false;
  }
  s.check("detection cost monotone in collinear treasure distance", mono_ok, mono_ok ? 1 : 0, 1);
  return s.results;
}

// --- scan ---

std::vector<CheckResult> verify_scan() {
  Suite s{"scan", {}};
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> side(0.5, 40.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);

  double worst_cover = 0.0, worst_cost_ratio = 0.0, worst_return = 0.0;
  for (int t = 0; t < 40; ++t) {
    double su = side(rng), sv = side(rng);
    OrientedRect rect({unit(rng) * 10, unit(rng) * 10}, dir_from_angle(ang(rng)), su / 2, sv / 2);
    Vec2 local{(unit(rng) - 0.5) * su, (unit(rng) - 0.5) * sv};
    Point start = rect.to_world(local);
    std::vector<Point> wp = rectangle_scan_waypoints(rect, start);
    std::vector<Point> full;
    full.push_back(start);
    full.insert(full.end(), wp.begin(), wp.end());
    worst_cover = std::max(worst_cover, max_coverage_distance(full, rect, 0.1));
    double cost = 0.0;
    for (std::size_t i = 1; i < full.size(); ++i) cost += (full[i] - full[i - 1]).norm();
    double m = rect.min_side(), n = rect.max_side();
    worst_cost_ratio = std::max(worst_cost_ratio, cost / (5.0 * n * std::max(m, 2.0)));
    worst_return = std::max(worst_return, (full.back() - start).norm());
  }
  s.check_le("scan covers every grid point within the detection radius", worst_cover,
             kDetectionRadius + 1e-6);
  s.check_le("scan cost over the bound 5*n*max(m,2)", worst_cost_ratio, 1.0);
  s.check_le("scan returns to its start point", worst_return, 1e-9);
  return s.results;
}

// --- reduce ---

std::vector<CheckResult> verify_reduce() {
  Suite s{"reduce", {}};
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> side(4.0, 64.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  bool prop2_ok = true, prop3_ok = true;
  for (int t = 0; t < 5000; ++t) {
    StraightRect r(0, side(rng), 0, side(rng));
    double angle = unit(rng) * kPi;
    Side sides[4] = {Side::right, Side::left, Side::up, Side::down};
    Line l = Line::from_angle(r.center(), angle);
    Side x = l.horizontal() ? sides[2 + (t % 2)] : sides[t % 2];
    Configuration config(r, HalfPlane(l, x));
    ConfigClass c = classify(config);
    if (c.type_id < 1 || c.type_id > 4) prop2_ok = false;
    if (c.perfection == Perfection::perfect && c.type_id > 2) prop2_ok = false;
    int basics = 0;
    int smallest = -1;
    for (int k = 0; k < 8; ++k) {
      ConfigTransform tr(r.center(), k);
      if (is_basic(classify(tr.apply(config)))) {
        ++basics;
        if (smallest < 0) smallest = k;
      }
    }
    if (basics < 1) prop3_ok = false;
    try {
      if (basic_transformation(config).transform.index() != smallest) prop3_ok = false;
    } catch (const Error&) {
      prop3_ok = false;
    }
  }
  s.check("every configuration gets exactly one type", prop2_ok, prop2_ok ? 1 : 0, 1);
  s.check("some elementary transformation is basic; the smallest one is picked", prop3_ok,
          prop3_ok ? 1 : 0, 1);

  bool nest_ok = true;
  double worst_travel_ratio = 0.0, worst_drop = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 500; ++t) {
    double w = side(rng), h = side(rng);
    Point c{(unit(rng) - 0.5) * 20, (unit(rng) - 0.5) * 20};
    StraightRect r(c.x - w / 2, c.x + w / 2, c.y - h / 2, c.y + h / 2);
    Point z{r.west() + unit(rng) * w, r.south() + unit(rng) * h};
    HalfPlaneAdversary adv(z, HalfPlaneAdversary::Strategy::random_honest, 1000 + t);
    Episode ep(z, &adv);
    if (ep.found()) continue;
    ep.move_to(c);
    if (ep.halted()) continue;
    double before = ep.ledger().total;
    ReduceReport rr = reduce_rectangle(ep, r);
    if (ep.found()) continue;
    if (!r.contains_rect(rr.rect, 1e-9)) nest_ok = false;
    worst_drop = std::min(worst_drop, rr.perimeter_drop);
    worst_travel_ratio =
        std::max(worst_travel_ratio, (ep.ledger().total - before) / (21.0 * rr.perimeter_drop));
    if (!almost_equal(ep.position(), rr.rect.center(), 1e-9 * (1 + rr.rect.max_side()))) {
      nest_ok = false;
    }
    if (!rr.rect.contains(z, 1e-9)) nest_ok = false;
  }
  s.check("reduction keeps the treasure and recentres the agent", nest_ok, nest_ok ? 1 : 0, 1);
  s.check("perimeter drop at least 2", worst_drop >= 2.0 - 1e-9, worst_drop, 2.0);
  s.check_le("reduction travel over 21 * perimeter drop", worst_travel_ratio, 1.0 + 1e-9);
  return s.results;
}

// --- tiling ---

std::vector<CheckResult> verify_tiling() {
  Suite s{"tiling", {}};
  StraightRect square(-8, 8, -8, 8);

  bool partition_ok = true;
  for (int level = 0; level <= 3; ++level) {
    double total = 0.0;
    std::uint64_t n = 1ull << level;
    for (std::uint64_t cc = 0; cc < n; ++cc) {
      for (std::uint64_t rr = 0; rr < n; ++rr) {
        StraightRect tile = tile_rect(square, {level, cc, rr});
        total += tile.area();
        TileAddress back = tile_at_point(square, level, tile.center());
        if (back.col != cc || back.row != rr) partition_ok = false;
      }
    }
    if (std::abs(total - square.area()) > 1e-9 * square.area()) partition_ok = false;
  }
  s.check("tiles partition the square and addresses round-trip", partition_ok,
          partition_ok ? 1 : 0, 1);

  bool slicing_ok = true;
  for (int i : {3, 4, 5, 6}) {
    auto tris = slicing(square, i);
    double total = 0.0;
    double want = kTwoPi / std::ldexp(1.0, i);
    for (const auto& tri : tris) {
      total += std::abs(cross(tri.b0 - tri.apex, tri.b1 - tri.apex)) / 2.0;
      double got = cw_offset(tri.b1 - tri.apex, tri.b0 - tri.apex);
      if (std::abs(got - want) > 1e-12) slicing_ok = false;
    }
    if (std::abs(total - square.area()) > 1e-9 * square.area()) slicing_ok = false;
  }
  s.check("slicing partitions the square into equal-angle triangles", slicing_ok,
          slicing_ok ? 1 : 0, 1);

  s.check("rho(3) equals 2", rho(3) == 2, rho(3), 2);
  s.check("index(pi) equals 24", index_of(kPi) == 24, static_cast<double>(index_of(kPi)), 24);
  bool rho_mono = true;
  for (int i = 3; i < 8; ++i) {
    if (rho(i + 1) < rho(i)) rho_mono = false;
  }
  s.check("rho is monotone in the slicing order", rho_mono, rho_mono ? 1 : 0, 1);

  bool idx_mono = true;
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> adist(0.05, kTwoPi - 0.05);
  for (int t = 0; t < 100; ++t) {
    double a1 = adist(rng), a2 = adist(rng);
    if (a1 > a2) std::swap(a1, a2);
    if (index_of(a2) > index_of(a1)) idx_mono = false;
  }
  s.check("index is antitone in the angle", idx_mono, idx_mono ? 1 : 0, 1);

  bool eps_pos = true;
  for (long long psi = 1; psi <= 500; ++psi) {
    if (!(epsilon_exponent(psi) > 0.0)) eps_pos = false;
  }
  s.check("cost-exponent margin positive for every index", eps_pos, eps_pos ? 1 : 0, 1);

  bool witness_ok = true;
  for (std::uint64_t sector = 0; sector < 8; ++sector) {
    TileAddress w = witness_tile_in_triangle(square, 3, sector);
    if (!tile_in_triangle_interior(square, w, slicing_triangle(square, 3, sector))) {
      witness_ok = false;
    }
  }
  s.check("constructive witness tile sits inside its slicing triangle", witness_ok,
          witness_ok ? 1 : 0, 1);
  return s.results;
}

// --- mosaic ---

std::vector<CheckResult> verify_mosaic() {
  Suite s{"mosaic", {}};

  bool white_bound_ok = true, shrink_ok = true, home_ok = true;
  for (int i : {4, 6, 8}) {
    for (int k : {1, 2}) {
      Point z{std::ldexp(1.0, i), std::ldexp(1.0, i)};  // outside the square
      BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::random_honest,
                                99 + i + k);
      Episode ep(z, &adv);
      MosaicReport mr = mosaic(ep, i, k, {});
      if (mr.found) continue;
      double area = std::ldexp(1.0, 2 * i);
      double prev = area;
      for (int pass = 0; pass < mr.passes; ++pass) {
        double after = mr.white_area_after_pass[static_cast<std::size_t>(pass)];
        double cap = prev * (1.0 - std::pow(4.0, -k)) + 1e-9;
        if (mr.tiles_painted[static_cast<std::size_t>(pass)] > 0 && after > cap) shrink_ok = false;
        prev = after;
      }
      if (mr.index_max == k) {
        double bound =
            std::exp2(i * (3.0 + std::log(std::pow(4.0, k) - 1.0) / std::log(std::pow(4.0, k))) /
                      2.0);
        if (mr.white_area > bound) white_bound_ok = false;
      }
      if (!almost_equal(ep.position(), {0, 0}, 1e-9)) home_ok = false;
    }
  }
  s.check("per-pass white area shrinks by the painting fraction", shrink_ok, shrink_ok ? 1 : 0, 1);
  s.check("white area after the passes stays under the bound", white_bound_ok,
          white_bound_ok ? 1 : 0, 1);
  s.check("agent returns to the origin after each call", home_ok, home_ok ? 1 : 0, 1);

  bool detect_ok = true, sound_ok = true;
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    double half = 8.0;
    Point z{(unit(rng) - 0.5) * 2 * half * 0.9, (unit(rng) - 0.5) * 2 * half * 0.9};
    BoundedAngleAdversary adv(z, 3 * kPi / 2, BoundedAngleAdversary::Strategy::random_honest, t);
    Episode ep(z, &adv);
    if (ep.found()) continue;
    MosaicReport mr = mosaic(ep, 4, empirical_index(3 * kPi / 2), {});
    if (!mr.found) detect_ok = false;
    for (const StraightRect& r : mr.black_rects) {
      bool strictly_inside = z.x > r.west() + eps() && z.x < r.east() - eps() &&
                             z.y > r.south() + eps() && z.y < r.north() - eps();
      if (strictly_inside) sound_ok = false;
    }
  }
  s.check("treasure inside the square is found within one call", detect_ok, detect_ok ? 1 : 0, 1);
  s.check("treasure never strictly inside the painted region", sound_ok, sound_ok ? 1 : 0, 1);
  return s.results;
}

// --- baseline ---

std::vector<CheckResult> verify_baseline() {
  Suite s{"baseline", {}};

  std::vector<Point> spiral = spiral_waypoints(12.0);
  OrientedRect disc_box({0, 0}, {1, 0}, 10.0, 10.0);
  double cover = max_coverage_distance(spiral, disc_box, 0.1);
  s.check_le("spiral covers the box within the detection radius", cover, kDetectionRadius + 1e-6);

  ForbiddenAngleAdversary adv(10.0, 3);
  std::vector<Point> walk = spiral_waypoints(6.0);
  double len = 0.0;
  std::vector<Point> truncated{walk[0]};
  for (std::size_t i = 1; i < walk.size() && len < 50.0; ++i) {
    len += (walk[i] - walk[i - 1]).norm();
    truncated.push_back(walk[i]);
  }
  for (const Point& p : truncated) adv.query(p);
  AreaReport r1 = forbidden_area_audit(10.0, adv.transcript(), truncated, 1u << 18, 1);
  AreaReport r2 = forbidden_area_audit(10.0, adv.transcript(), truncated, 1u << 18, 2);
  s.check_le("forbidden area inside the disc under 2*D^2", r1.forbidden_disc_area,
             2.0 * 100.0 * 1.02);
  s.check("audit finds a residual witness", r1.witness.has_value(), r1.witness ? 1 : 0, 1);
  double rel = std::abs(r1.residual_area - r2.residual_area) /
               std::max(1.0, std::abs(r1.residual_area));
  s.check_le("independent-seed audits agree within 2 percent", rel, 0.02);
  return s.results;
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> all;
  for (auto* fn : {verify_geom, verify_hints, verify_simulator, verify_scan, verify_reduce,
                   verify_tiling, verify_mosaic, verify_baseline}) {
    auto part = fn();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

bool report_checks(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all_pass = true;
  for (const CheckResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.module << "] " << r.name << " (measured "
        << r.measured << ", bound " << r.bound << ")";
    if (!r.detail.empty()) out << " " << r.detail;
    out << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass;
}

}  // namespace hunt
