#pragma once

// Plane primitives for the treasure-hunt simulator: points, lines,
// half-planes, angular hints, straight and oriented rectangles, and the
// tolerant predicates over them.
//
// All predicates share a single global tolerance eps() (default 1e-9,
// overridable through the ANGULAR_HUNT_EPS environment variable).
// Coordinates are capped at 2^40 so that double-precision predicate error
// stays far below the tolerance.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hunt {

enum class ErrorCode {
  invalid_geometry,
  ambiguous_at_vertex,
  start_outside_rectangle,
  precondition_violated,
  no_basic_transform,
  case_dispatch_gap,
  move_after_found,
  oracle_dishonest,
  budget_exceeded,
  tile_budget_exceeded,
  level_overflow,
  guard_exceeded,
  no_feasible_index,
  paint_gap,
  io_error,
  bad_flags,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

const char* error_code_name(ErrorCode c);

// Global tolerance for all geometric predicates. Read once per process.
double eps();

inline constexpr double kMaxCoordinate = 1099511627776.0;  // 2^40
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
  Vec2 normalized() const;
  // Counterclockwise quarter turn.
  Vec2 perp() const { return {-y, x}; }
};

using Point = Vec2;

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline Vec2 operator*(double s, Vec2 v) { return v * s; }

bool is_finite(Vec2 v);
// Throws invalid_geometry on NaN/Inf or coordinates beyond 2^40.
void require_finite(Vec2 v, const char* what);

inline bool almost_equal(Vec2 a, Vec2 b, double tol) { return (a - b).norm() <= tol; }

// Angle helpers. Line angles live in [0, pi), ray angles in [0, 2*pi).
double wrap_two_pi(double a);
double wrap_line_angle(double a);
Vec2 dir_from_angle(double a);
// Rotate v clockwise by `a` radians.
Vec2 rotate_cw(Vec2 v, double a);
Vec2 rotate_ccw(Vec2 v, double a);
// Clockwise angular offset from ray direction `from` to ray direction `to`,
// in [0, 2*pi).
double cw_offset(Vec2 from, Vec2 to);

// A line stored in canonical form: unit direction with angle in [0, pi).
class Line {
 public:
  Line(Point anchor, Vec2 direction);
  static Line from_points(Point a, Point b);
  static Line from_angle(Point anchor, double angle);

  Point anchor() const { return anchor_; }
  Vec2 direction() const { return dir_; }
  double angle() const { return angle_; }

  bool horizontal() const;
  bool vertical() const;
  // Negative/positive slope classification; meaningful only when the line is
  // neither horizontal nor vertical.
  bool negative_slope() const;

  // cross(direction, p - anchor): 0 on the line, sign picks a side.
  double side_value(Point p) const { return cross(dir_, p - anchor_); }
  bool contains(Point p) const { return std::abs(side_value(p)) <= eps(); }

  // (angle, signed offset of the origin): equal lines agree on both.
  std::array<double, 2> canonical_form() const;

 private:
  Point anchor_;
  Vec2 dir_;
  double angle_;
};

enum class Side { right, left, up, down };
const char* side_name(Side s);

// A closed half-plane. The side label is `up`/`down` exactly when the
// boundary is horizontal, `right`/`left` otherwise.
class HalfPlane {
 public:
  HalfPlane(Line boundary, Side side);
  // Half-plane through `anchor` whose interior lies along `normal`.
  static HalfPlane from_anchor_normal(Point anchor, Vec2 normal);

  const Line& boundary() const { return boundary_; }
  Side side() const { return side_; }
  Vec2 inward_normal() const { return normal_; }
  double signed_distance(Point p) const { return dot(p - boundary_.anchor(), normal_); }
  bool contains(Point p) const { return signed_distance(p) >= -eps(); }
  HalfPlane complement() const;

 private:
  HalfPlane(Line boundary, Side side, Vec2 normal)
      : boundary_(boundary), side_(side), normal_(normal) {}
  Line boundary_;
  Side side_;
  Vec2 normal_;
};

// A closed angle with vertex at the agent's position: the set swept
// clockwise from ray p1 to ray p2, both rays included. The sweep size is
// stored explicitly and lies in (0, 2*pi).
class AngularHint {
 public:
  AngularHint(Point vertex, Vec2 p1, double sweep_size);

  Point vertex() const { return vertex_; }
  Vec2 p1() const { return p1_; }
  Vec2 p2() const { return rotate_cw(p1_, size_); }
  double size() const { return size_; }
  AngularHint complement() const { return AngularHint(vertex_, p2(), kTwoPi - size_); }

  // True iff the direction vertex -> p lies in the closed sweep.
  // Throws ambiguous_at_vertex when p coincides with the vertex; callers
  // that need the honest reading use contains_or_vertex.
  bool contains(Point p) const;
  bool contains_or_vertex(Point p) const;
  bool contains_direction(Vec2 u) const;

 private:
  Point vertex_;
  Vec2 p1_;
  double size_;
};

// Axis-aligned rectangle with strictly positive extents.
class StraightRect {
 public:
  StraightRect(double west, double east, double south, double north);
  static StraightRect centered_square(Point center, double side);

  double west() const { return west_; }
  double east() const { return east_; }
  double south() const { return south_; }
  double north() const { return north_; }
  double width() const { return east_ - west_; }
  double height() const { return north_ - south_; }
  double min_side() const { return std::min(width(), height()); }
  double max_side() const { return std::max(width(), height()); }
  double perimeter() const { return 2.0 * (width() + height()); }
  double area() const { return width() * height(); }
  Point center() const { return {(west_ + east_) / 2.0, (south_ + north_) / 2.0}; }

  // Corners clockwise from the north-west.
  Point corner_nw() const { return {west_, north_}; }
  Point corner_ne() const { return {east_, north_}; }
  Point corner_se() const { return {east_, south_}; }
  Point corner_sw() const { return {west_, south_}; }

  bool contains(Point p, double tol) const;
  bool contains_rect(const StraightRect& r, double tol) const;

 private:
  double west_, east_, south_, north_;
};

// Rectangle in arbitrary orientation: center, unit axis of the "u" sides,
// and half extents. The "v" axis is the counterclockwise perpendicular.
class OrientedRect {
 public:
  OrientedRect(Point center, Vec2 axis, double half_u, double half_v);
  static OrientedRect from_straight(const StraightRect& r);
  // Corners in rectangle order (consecutive corners adjacent). Throws
  // invalid_geometry when the four points do not form a rectangle.
  static OrientedRect from_corners(Point a, Point b, Point c, Point d);

  Point center() const { return center_; }
  Vec2 axis_u() const { return u_; }
  Vec2 axis_v() const { return u_.perp(); }
  double half_u() const { return hu_; }
  double half_v() const { return hv_; }
  double side_u() const { return 2.0 * hu_; }
  double side_v() const { return 2.0 * hv_; }
  double min_side() const { return std::min(side_u(), side_v()); }
  double max_side() const { return std::max(side_u(), side_v()); }

  Point to_world(Vec2 local) const { return center_ + u_ * local.x + u_.perp() * local.y; }
  Vec2 to_local(Point world) const;
  bool contains(Point p, double tol) const;
  std::array<Point, 4> corners() const;

 private:
  Point center_;
  Vec2 u_;
  double hu_, hv_;
};

// --- Free-function predicates and constructions ---

double dist_point_segment(Point p, Point a, Point b);
Point project_point_line(Point p, const Line& l);
// nullopt encodes parallel (including coincident) lines.
std::optional<Point> line_intersection(const Line& l1, const Line& l2);
bool halfplane_contains(const HalfPlane& h, Point p);
bool angle_contains(const AngularHint& hint, Point p);

// Exact quarter-turn rotation about a center; quarter_turns in {0,1,2,3},
// counterclockwise.
Point rotate_about(Point p, Point center, int quarter_turns);
// Exact reflection about the vertical line x = axis_x.
Point reflect_vertical(Point p, double axis_x);

// Half-plane as the size-pi angular hint covering it, and back.
AngularHint halfplane_to_hint(const HalfPlane& h);
HalfPlane hint_to_halfplane(const AngularHint& hint);

// Clockwise half-open arc test on canonical line angles (mod pi):
// true iff `angle` lies in the clockwise sweep from `from` (included)
// to `to` (excluded). An empty sweep (from == to mod pi) contains nothing.
bool cw_line_arc_contains(double from, double to, double angle);

}  // namespace hunt
