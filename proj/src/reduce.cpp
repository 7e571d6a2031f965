#include "hunt/reduce.h"

#include <algorithm>
#include <cmath>

namespace hunt {

namespace {

double scale_tol(const StraightRect& r) { return eps() * (1.0 + r.max_side()); }

}  // namespace

Configuration::Configuration(StraightRect r, HalfPlane h) : rect(r), hint(h) {
  if (std::abs(h.boundary().side_value(r.center())) > scale_tol(r)) {
    throw Error(ErrorCode::precondition_violated,
                "configuration hint must pass through the rectangle centre");
  }
}

ConfigClass classify(const Configuration& config) {
  const StraightRect& r = config.rect;
  const Line& l = config.hint.boundary();
  Side x = config.hint.side();
  Point c = r.center();
  double tol = scale_tol(r);

  ConfigClass out{};
  if (l.horizontal()) {
    out.posture = Posture::lying;  // meets both vertical sides at mid-height
    out.perfection = Perfection::perfect;
    out.type_id = (x == Side::up) ? 1 : 2;
  } else if (l.vertical()) {
    out.posture = Posture::standing;
    out.perfection = Perfection::perfect;
    out.type_id = (x == Side::left) ? 1 : 2;
  } else {
    out.perfection = Perfection::imperfect;
    bool negative = l.negative_slope();
    bool right = (x == Side::right);
    out.type_id = negative ? (right ? 1 : 2) : (right ? 3 : 4);
    // Lying iff the line meets the open interior of a vertical side;
    // corner incidence counts as standing.
    double slope = l.direction().y / l.direction().x;
    double offset = std::abs(slope) * r.width() / 2.0;
    out.posture = (offset < r.height() / 2.0 - tol) ? Posture::lying : Posture::standing;
  }

  // Critical iff some side is divided leaving a piece shorter than 1
  // (a tie at exactly 1 is not critical).
  out.critical = false;
  auto check_piece = [&](double piece) {
    if (piece < 1.0 - eps()) out.critical = true;
  };
  if (!l.vertical()) {
    double slope = l.direction().y / l.direction().x;
    for (double sx : {r.west(), r.east()}) {
      double y = c.y + (sx - c.x) * slope;
      if (y >= r.south() - tol && y <= r.north() + tol) {
        check_piece(std::max(0.0, std::min(y - r.south(), r.north() - y)));
      }
    }
  }
  if (!l.horizontal()) {
    double inv_slope = l.direction().x / l.direction().y;
    for (double sy : {r.south(), r.north()}) {
      double xx = c.x + (sy - c.y) * inv_slope;
      if (xx >= r.west() - tol && xx <= r.east() + tol) {
        check_piece(std::max(0.0, std::min(xx - r.west(), r.east() - xx)));
      }
    }
  }
  return out;
}

bool is_basic(const ConfigClass& c) { return c.posture == Posture::lying && c.type_id == 1; }

// --- ConfigTransform ---

ConfigTransform::ConfigTransform(Point pivot, int k) : pivot_(pivot), k_(k) {
  if (k < 0 || k > 7) {
    throw Error(ErrorCode::precondition_violated, "elementary transformation index in 0..7");
  }
  quarter_turns_ = k % 4;
  reflect_ = k >= 4;
}

Point ConfigTransform::apply(Point p) const {
  Point q = rotate_about(p, pivot_, quarter_turns_);
  return reflect_ ? reflect_vertical(q, pivot_.x) : q;
}

Point ConfigTransform::apply_inverse(Point p) const {
  Point q = reflect_ ? reflect_vertical(p, pivot_.x) : p;
  return rotate_about(q, pivot_, (4 - quarter_turns_) % 4);
}

Vec2 ConfigTransform::apply_dir(Vec2 v) const {
  Point q = rotate_about({v.x, v.y}, {0.0, 0.0}, quarter_turns_);
  return reflect_ ? Vec2{-q.x, q.y} : Vec2{q.x, q.y};
}

StraightRect ConfigTransform::apply(const StraightRect& r) const {
  Point a = apply(r.corner_sw());
  Point b = apply(r.corner_ne());
  return StraightRect(std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                      std::max(a.y, b.y));
}

StraightRect ConfigTransform::apply_inverse(const StraightRect& r) const {
  Point a = apply_inverse(r.corner_sw());
  Point b = apply_inverse(r.corner_ne());
  return StraightRect(std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                      std::max(a.y, b.y));
}

HalfPlane ConfigTransform::apply(const HalfPlane& h) const {
  return HalfPlane::from_anchor_normal(apply(h.boundary().anchor()),
                                       apply_dir(h.inward_normal()));
}

Configuration ConfigTransform::apply(const Configuration& c) const {
  return Configuration(apply(c.rect), apply(c.hint));
}

OrientedRect ConfigTransform::apply_inverse(const OrientedRect& r) const {
  auto c = r.corners();
  return OrientedRect::from_corners(apply_inverse(c[0]), apply_inverse(c[1]),
                                    apply_inverse(c[2]), apply_inverse(c[3]));
}

BasicTransformResult basic_transformation(const Configuration& config) {
  for (int k = 0; k < 8; ++k) {
    ConfigTransform t(config.rect.center(), k);
    Configuration image = t.apply(config);
    if (is_basic(classify(image))) return {t, image};
  }
  // Reachable only for a hint lying exactly on a rectangle diagonal, where
  // corner incidence blocks every lying image.
  throw Error(ErrorCode::no_basic_transform, "no elementary transformation yields a basic configuration");
}

// --- reduce_rectangle ---

namespace {

Point vertical_side_cut(const Line& l, double x) {
  // l is never vertical here (basic configurations are horizontal or of
  // negative slope).
  double t = (x - l.anchor().x) / l.direction().x;
  return l.anchor() + l.direction() * t;
}

Point horizontal_cut(const Line& l, double y) {
  double t = (y - l.anchor().y) / l.direction().y;
  return l.anchor() + l.direction() * t;
}

}  // namespace

ReduceReport reduce_rectangle(Episode& ep, const StraightRect& rect) {
  double tol = scale_tol(rect);
  if (rect.min_side() < 4.0 - tol) {
    throw Error(ErrorCode::precondition_violated, "reduction needs every side of length >= 4");
  }
  Point p = rect.center();
  if (!almost_equal(ep.position(), p, 1e-6 * (1.0 + rect.max_side()))) {
    throw Error(ErrorCode::precondition_violated, "reduction must start at the rectangle centre");
  }

  const double cost_before = ep.ledger().total;
  ReduceReport rep{rect};
  auto bail = [&]() {
    rep.found = ep.found();
    rep.travel = ep.ledger().total - cost_before;
    return rep;
  };

  HalfPlane first_hint = hint_to_halfplane(ep.get_hint());
  Configuration config(rect, first_hint);
  BasicTransformResult basic = basic_transformation(config);
  const ConfigTransform& T = basic.transform;
  const StraightRect& R = basic.transformed.rect;
  const HalfPlane& L1 = basic.transformed.hint;
  ConfigClass cls = classify(basic.transformed);
  rep.critical = cls.critical;

  const double west = R.west(), east = R.east(), south = R.south(), north = R.north();
  Point d = vertical_side_cut(L1.boundary(), east);

  StraightRect new_rect = R;
  if (!cls.critical) {
    new_rect = StraightRect(west, east, d.y, north);
  } else {
    if (cls.perfection == Perfection::perfect) {
      // A perfect critical configuration needs a side shorter than 2.
      throw Error(ErrorCode::precondition_violated,
                  "critical perfect configuration with sides >= 4");
    }
    // Second vantage point two units into the indicated half-plane,
    // perpendicularly off the hint boundary.
    Vec2 n = L1.inward_normal();
    Point p2 = p + n * 2.0;
    Line l2_boundary(p2, L1.boundary().direction());

    Point f = horizontal_cut(l2_boundary, north);
    Point j = vertical_side_cut(l2_boundary, east);
    if (!(f.x > west && f.x < east && j.y > south && j.y < north)) {
      throw Error(ErrorCode::case_dispatch_gap,
                  "shifted hint boundary must cut the north and east sides");
    }

    Point k{east, p.y};
    Point s = project_point_line(R.corner_nw(), L1.boundary());
    Point s2 = project_point_line(R.corner_nw(), l2_boundary);
    Point d2 = project_point_line(d, l2_boundary);

    StraightRect r_mkkm(west, east, p.y, p2.y);
    StraightRect r_gghh(p.x, p2.x, south, north);
    OrientedRect r_ssdd = OrientedRect::from_corners(s, s2, d2, d);

    if (ep.move_to(T.apply_inverse(p2)) != MoveOutcome::arrived) return bail();
    HalfPlane second_hint = T.apply(hint_to_halfplane(ep.get_hint()));
    Side x2 = second_hint.side();
    double theta2 = second_hint.boundary().angle();

    const double a_l1 = L1.boundary().angle();
    const double a_pp = Line(p, n).angle();
    const double a_mk = 0.0;
    const double a_gh = kPi / 2.0;
    const double a_pk = Line::from_points(p2, k).angle();
    auto in_arc = [&](double from, double to) { return cw_line_arc_contains(from, to, theta2); };
    auto scan = [&](const OrientedRect& target) {
      return rectangle_scan(ep, T.apply_inverse(target)) == ScanOutcome::completed;
    };

    if (x2 == Side::right && in_arc(a_l1, a_pp)) {
      rep.case_id = 1;
      new_rect = StraightRect(f.x, east, south, north);
    } else if (x2 == Side::right && in_arc(a_pp, a_mk)) {
      rep.case_id = 2;
      if (!scan(OrientedRect::from_straight(r_mkkm))) return bail();
      new_rect = StraightRect(p.x, east, south, north);
    } else if ((x2 == Side::down || x2 == Side::left) && in_arc(a_mk, a_l1)) {
      rep.case_id = 3;
      if (!scan(r_ssdd)) return bail();
      if (!scan(OrientedRect::from_straight(r_mkkm))) return bail();
      new_rect = StraightRect(p.x, east, south, p.y);
    } else if (x2 == Side::left && in_arc(a_l1, a_gh)) {
      rep.case_id = 4;
      if (!scan(r_ssdd)) return bail();
      if (!scan(OrientedRect::from_straight(r_gghh))) return bail();
      new_rect = StraightRect(west, p.x, p.y, north);
    } else if ((x2 == Side::left && (in_arc(a_gh, a_pp) || in_arc(a_pp, a_mk))) ||
               ((x2 == Side::up || x2 == Side::right) && in_arc(a_mk, a_pk))) {
      rep.case_id = 5;
      if (!scan(OrientedRect::from_straight(r_gghh))) return bail();
      new_rect = StraightRect(west, east, p.y, north);
    } else if (x2 == Side::right && in_arc(a_pk, a_l1)) {
      rep.case_id = 6;
      new_rect = StraightRect(west, east, j.y, north);
    } else {
      throw Error(ErrorCode::case_dispatch_gap, "second hint matched none of the six cases");
    }
  }

  if (ep.move_to(T.apply_inverse(new_rect.center())) != MoveOutcome::arrived) return bail();
  rep.rect = T.apply_inverse(new_rect);
  rep.travel = ep.ledger().total - cost_before;
  rep.perimeter_drop = rect.perimeter() - rep.rect.perimeter();
  rep.found = false;
  return rep;
}

// --- treasure_hunt_halfplane ---

HalfPlaneHuntReport treasure_hunt_halfplane(Episode& ep, const HalfPlaneHuntOptions& options) {
  if (ep.trajectory().waypoints.size() != 1 || ep.ledger().total != 0.0) {
    throw Error(ErrorCode::precondition_violated, "half-plane hunt needs a fresh episode");
  }
  HalfPlaneHuntReport report;
  if (ep.found()) {
    report.found = true;
    return report;
  }
  const Point origin{0.0, 0.0};
  for (int i = 1; i <= options.max_phases; ++i) {
    report.phases = i;
    double phase_start = ep.ledger().total;
    StraightRect r = StraightRect::centered_square(origin, std::ldexp(1.0, i));
    while (r.min_side() >= 4.0 && !ep.halted()) {
      ReduceReport rr = reduce_rectangle(ep, r);
      ++report.reduce_calls;
      if (ep.halted()) break;
      ++report.case_counts[static_cast<std::size_t>(rr.case_id)];
      r = rr.rect;
    }
    if (!ep.halted()) rectangle_scan(ep, r);
    if (!ep.halted()) ep.move_to(origin);
    report.phase_costs.push_back(ep.ledger().total - phase_start);
    if (ep.halted()) break;
  }
  report.found = ep.found();
  report.cost = ep.ledger().total;
  return report;
}

}  // namespace hunt
