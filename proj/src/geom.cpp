#include "hunt/geom.h"

#include <algorithm>
#include <cstdlib>

namespace hunt {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_geometry: return "InvalidGeometry";
    case ErrorCode::ambiguous_at_vertex: return "AmbiguousAtVertex";
    case ErrorCode::start_outside_rectangle: return "StartOutsideRectangle";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::no_basic_transform: return "NoBasicTransform";
    case ErrorCode::case_dispatch_gap: return "CaseDispatchGap";
    case ErrorCode::move_after_found: return "MoveAfterFound";
    case ErrorCode::oracle_dishonest: return "OracleDishonest";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::tile_budget_exceeded: return "TileBudgetExceeded";
    case ErrorCode::level_overflow: return "LevelOverflow";
    case ErrorCode::guard_exceeded: return "GuardExceeded";
    case ErrorCode::no_feasible_index: return "NoFeasibleIndex";
    case ErrorCode::paint_gap: return "PaintGap";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::bad_flags: return "BadFlags";
  }
  return "UnknownError";
}

double eps() {
  static const double value = [] {
    if (const char* s = std::getenv("ANGULAR_HUNT_EPS")) {
      char* end = nullptr;
      double v = std::strtod(s, &end);
      if (end != s && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-9;
  }();
  return value;
}

Vec2 Vec2::normalized() const {
  double n = norm();
  if (n <= 0.0 || !std::isfinite(n)) {
    throw Error(ErrorCode::invalid_geometry, "cannot normalize zero or non-finite vector");
  }
  return {x / n, y / n};
}

bool is_finite(Vec2 v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::abs(v.x) <= kMaxCoordinate &&
         std::abs(v.y) <= kMaxCoordinate;
}

void require_finite(Vec2 v, const char* what) {
  if (!is_finite(v)) {
    throw Error(ErrorCode::invalid_geometry,
                std::string(what) + ": coordinates must be finite and at most 2^40");
  }
}

double wrap_two_pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double wrap_line_angle(double a) {
  double r = std::fmod(a, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

Vec2 dir_from_angle(double a) { return {std::cos(a), std::sin(a)}; }

Vec2 rotate_cw(Vec2 v, double a) {
  double c = std::cos(a), s = std::sin(a);
  return {v.x * c + v.y * s, -v.x * s + v.y * c};
}

Vec2 rotate_ccw(Vec2 v, double a) {
  double c = std::cos(a), s = std::sin(a);
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}

double cw_offset(Vec2 from, Vec2 to) {
  double a = std::atan2(from.y, from.x) - std::atan2(to.y, to.x);
  return wrap_two_pi(a);
}

// --- Line ---

Line::Line(Point anchor, Vec2 direction) : anchor_(anchor) {
  require_finite(anchor, "line anchor");
  Vec2 d = direction.normalized();
  // Canonical sign: angle in [0, pi). Flip when pointing into the lower
  // half-circle, or along the negative x axis.
  if (d.y < 0.0 || (d.y == 0.0 && d.x < 0.0)) d = -d;
  dir_ = d;
  angle_ = std::atan2(d.y, d.x);
  if (angle_ < 0.0) angle_ += kPi;
  if (angle_ >= kPi) angle_ -= kPi;
}

Line Line::from_points(Point a, Point b) {
  require_finite(a, "line point");
  require_finite(b, "line point");
  return Line(a, b - a);
}

Line Line::from_angle(Point anchor, double angle) { return Line(anchor, dir_from_angle(angle)); }

bool Line::horizontal() const { return std::abs(dir_.y) <= eps(); }

bool Line::vertical() const { return std::abs(dir_.x) <= eps(); }

bool Line::negative_slope() const { return dir_.x < 0.0; }

std::array<double, 2> Line::canonical_form() const {
  return {angle_, cross(dir_, anchor_)};
}

// --- HalfPlane ---

namespace {

Side side_from_normal(Vec2 n) {
  if (std::abs(n.x) <= eps()) return n.y > 0.0 ? Side::up : Side::down;
  return n.x > 0.0 ? Side::right : Side::left;
}

}  // namespace

const char* side_name(Side s) {
  switch (s) {
    case Side::right: return "right";
    case Side::left: return "left";
    case Side::up: return "up";
    case Side::down: return "down";
  }
  return "?";
}

HalfPlane::HalfPlane(Line boundary, Side side) : boundary_(boundary), side_(side) {
  Vec2 n = boundary.direction().perp();  // unit normal, one of the two
  bool horizontal = boundary.horizontal();
  if ((side == Side::up || side == Side::down) != horizontal) {
    throw Error(ErrorCode::invalid_geometry,
                "half-plane side must be up/down exactly for horizontal boundaries");
  }
  switch (side) {
    case Side::right: normal_ = n.x > 0.0 ? n : -n; break;
    case Side::left: normal_ = n.x < 0.0 ? n : -n; break;
    case Side::up: normal_ = n.y > 0.0 ? n : -n; break;
    case Side::down: normal_ = n.y < 0.0 ? n : -n; break;
  }
}

HalfPlane HalfPlane::from_anchor_normal(Point anchor, Vec2 normal) {
  Vec2 n = normal.normalized();
  Line boundary(anchor, n.perp());
  return HalfPlane(boundary, side_from_normal(n), n);
}

HalfPlane HalfPlane::complement() const {
  Side opp;
  switch (side_) {
    case Side::right: opp = Side::left; break;
    case Side::left: opp = Side::right; break;
    case Side::up: opp = Side::down; break;
    case Side::down: opp = Side::up; break;
    default: opp = Side::left; break;
  }
  return HalfPlane(boundary_, opp, -normal_);
}

// --- AngularHint ---

AngularHint::AngularHint(Point vertex, Vec2 p1, double sweep_size) : vertex_(vertex) {
  require_finite(vertex, "hint vertex");
  p1_ = p1.normalized();
  if (!(sweep_size > 0.0 && sweep_size < kTwoPi)) {
    throw Error(ErrorCode::invalid_geometry, "hint sweep must lie strictly in (0, 2*pi)");
  }
  size_ = sweep_size;
}

bool AngularHint::contains_direction(Vec2 u) const {
  double off = cw_offset(p1_, u.normalized());
  if (off <= size_ + eps()) return true;
  // The p1 ray seen from just above (offset near 2*pi).
  return kTwoPi - off <= eps();
}

bool AngularHint::contains(Point p) const {
  Vec2 u = p - vertex_;
  if (u.norm() <= eps()) {
    throw Error(ErrorCode::ambiguous_at_vertex, "direction undefined: point is the hint vertex");
  }
  return contains_direction(u);
}

bool AngularHint::contains_or_vertex(Point p) const {
  Vec2 u = p - vertex_;
  if (u.norm() <= eps()) return true;
  return contains_direction(u);
}

// --- StraightRect ---

StraightRect::StraightRect(double west, double east, double south, double north)
    : west_(west), east_(east), south_(south), north_(north) {
  require_finite({west, south}, "rectangle corner");
  require_finite({east, north}, "rectangle corner");
  if (!(west < east && south < north)) {
    throw Error(ErrorCode::invalid_geometry, "rectangle sides must have strictly positive length");
  }
}

StraightRect StraightRect::centered_square(Point center, double side) {
  double h = side / 2.0;
  return StraightRect(center.x - h, center.x + h, center.y - h, center.y + h);
}

bool StraightRect::contains(Point p, double tol) const {
  return p.x >= west_ - tol && p.x <= east_ + tol && p.y >= south_ - tol && p.y <= north_ + tol;
}

bool StraightRect::contains_rect(const StraightRect& r, double tol) const {
  return r.west_ >= west_ - tol && r.east_ <= east_ + tol && r.south_ >= south_ - tol &&
         r.north_ <= north_ + tol;
}

// --- OrientedRect ---

OrientedRect::OrientedRect(Point center, Vec2 axis, double half_u, double half_v)
    : center_(center), u_(axis.normalized()), hu_(half_u), hv_(half_v) {
  require_finite(center, "rectangle center");
  if (!(half_u > 0.0 && half_v > 0.0)) {
    throw Error(ErrorCode::invalid_geometry, "rectangle half-extents must be positive");
  }
}

OrientedRect OrientedRect::from_straight(const StraightRect& r) {
  return OrientedRect(r.center(), {1.0, 0.0}, r.width() / 2.0, r.height() / 2.0);
}

OrientedRect OrientedRect::from_corners(Point a, Point b, Point c, Point d) {
  Vec2 ab = b - a, dc = c - d, ad = d - a;
  double scale = std::max({1.0, ab.norm(), ad.norm()});
  if ((ab - dc).norm() > 1e-6 * scale || std::abs(dot(ab, ad)) > 1e-6 * scale * scale) {
    throw Error(ErrorCode::invalid_geometry, "corners do not form a rectangle");
  }
  Point center = (a + c) * 0.5;
  return OrientedRect(center, ab, ab.norm() / 2.0, ad.norm() / 2.0);
}

Vec2 OrientedRect::to_local(Point world) const {
  Vec2 r = world - center_;
  return {dot(r, u_), dot(r, u_.perp())};
}

bool OrientedRect::contains(Point p, double tol) const {
  Vec2 l = to_local(p);
  return std::abs(l.x) <= hu_ + tol && std::abs(l.y) <= hv_ + tol;
}

std::array<Point, 4> OrientedRect::corners() const {
  Vec2 eu = u_ * hu_, ev = u_.perp() * hv_;
  return {center_ - eu + ev, center_ + eu + ev, center_ + eu - ev, center_ - eu - ev};
}

// --- Free functions ---

double dist_point_segment(Point p, Point a, Point b) {
  require_finite(p, "point");
  require_finite(a, "segment end");
  require_finite(b, "segment end");
  Vec2 ab = b - a;
  double len2 = ab.squared_norm();
  if (len2 == 0.0) return (p - a).norm();
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return (p - (a + ab * t)).norm();
}

Point project_point_line(Point p, const Line& l) {
  require_finite(p, "point");
  return l.anchor() + l.direction() * dot(p - l.anchor(), l.direction());
}

std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  double denom = cross(l1.direction(), l2.direction());
  if (std::abs(denom) <= eps()) return std::nullopt;
  double t = cross(l2.anchor() - l1.anchor(), l2.direction()) / denom;
  return l1.anchor() + l1.direction() * t;
}

bool halfplane_contains(const HalfPlane& h, Point p) { return h.contains(p); }

bool angle_contains(const AngularHint& hint, Point p) { return hint.contains(p); }

Point rotate_about(Point p, Point center, int quarter_turns) {
  if (quarter_turns < 0 || quarter_turns > 3) {
    throw Error(ErrorCode::precondition_violated, "quarter_turns must be in {0,1,2,3}");
  }
  Vec2 r = p - center;
  switch (quarter_turns) {
    case 1: r = {-r.y, r.x}; break;
    case 2: r = {-r.x, -r.y}; break;
    case 3: r = {r.y, -r.x}; break;
    default: break;
  }
  return center + r;
}

Point reflect_vertical(Point p, double axis_x) { return {2.0 * axis_x - p.x, p.y}; }

AngularHint halfplane_to_hint(const HalfPlane& h) {
  Vec2 d = h.boundary().direction();
  // Pick the boundary direction whose clockwise quarter turn points inward;
  // the clockwise half-turn sweep from it covers exactly the half-plane.
  Vec2 cw_of_d{d.y, -d.x};
  Vec2 p1 = dot(cw_of_d, h.inward_normal()) > 0.0 ? d : -d;
  return AngularHint(h.boundary().anchor(), p1, kPi);
}

HalfPlane hint_to_halfplane(const AngularHint& hint) {
  if (std::abs(hint.size() - kPi) > eps()) {
    throw Error(ErrorCode::invalid_geometry, "hint is not a half-plane: sweep differs from pi");
  }
  Vec2 p1 = hint.p1();
  Vec2 inward{p1.y, -p1.x};  // clockwise quarter turn of p1
  return HalfPlane::from_anchor_normal(hint.vertex(), inward);
}

bool cw_line_arc_contains(double from, double to, double angle) {
  auto wrap = [](double a) {
    double r = std::fmod(a, kPi);
    if (r < 0.0) r += kPi;
    return r;
  };
  double span = wrap(from - to);
  if (span <= eps()) return false;  // empty arc
  double off = wrap(from - angle);
  // A line within eps of `from` (from either side of the wrap) sits at the
  // included end of the arc.
  if (off <= eps() || off >= kPi - eps()) off = 0.0;
  if (std::abs(off - span) <= eps()) return false;  // lands on the excluded end
  return off < span;
}

}  // namespace hunt
