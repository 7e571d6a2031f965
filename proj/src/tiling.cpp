#include "hunt/tiling.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>

namespace hunt {

namespace {

void require_square(const StraightRect& base) {
  if (std::abs(base.width() - base.height()) > eps() * (1.0 + base.width())) {
    throw Error(ErrorCode::precondition_violated, "tiling base must be a square");
  }
}

void require_level(int level) {
  if (level < 0 || level > 62) {
    throw Error(ErrorCode::level_overflow, "tiling level out of range");
  }
}

std::mutex g_memo_mutex;

}  // namespace

StraightRect tile_rect(const StraightRect& base, const TileAddress& t) {
  require_square(base);
  require_level(t.level);
  std::uint64_t n = 1ull << t.level;
  if (t.col >= n || t.row >= n) {
    throw Error(ErrorCode::precondition_violated, "tile address outside the base square");
  }
  double side = base.width() / static_cast<double>(n);
  double w = base.west() + side * static_cast<double>(t.col);
  double s = base.south() + side * static_cast<double>(t.row);
  return StraightRect(w, w + side, s, s + side);
}

TileAddress tile_at_point(const StraightRect& base, int level, Point p) {
  require_square(base);
  require_level(level);
  std::uint64_t n = 1ull << level;
  double side = base.width() / static_cast<double>(n);
  auto clamp_index = [&](double offset) {
    double idx = std::floor(offset / side);
    idx = std::clamp(idx, 0.0, static_cast<double>(n - 1));
    return static_cast<std::uint64_t>(idx);
  };
  return {level, clamp_index(p.x - base.west()), clamp_index(p.y - base.south())};
}

std::array<double, 3> SlicingTriangle::side_lengths() const {
  return {(b0 - apex).norm(), (b1 - apex).norm(), (b1 - b0).norm()};
}

Point square_boundary_point(const StraightRect& square, double angle) {
  require_square(square);
  double h = square.width() / 2.0;
  double c = std::cos(angle), s = std::sin(angle);
  double t = h / std::max(std::abs(c), std::abs(s));
  return square.center() + Vec2{c, s} * t;
}

namespace {

void require_slicing_order(int i, int max_i) {
  if (i < 3) throw Error(ErrorCode::precondition_violated, "slicing order must be >= 3");
  if (i > max_i) throw Error(ErrorCode::guard_exceeded, "slicing order beyond enumeration guard");
}

}  // namespace

SlicingTriangle slicing_triangle(const StraightRect& square, int i, std::uint64_t sector) {
  require_slicing_order(i, 24);
  std::uint64_t n = 1ull << i;
  if (sector >= n) {
    throw Error(ErrorCode::precondition_violated, "sector index outside the slicing");
  }
  double step = kTwoPi / static_cast<double>(n);
  return {square.center(), square_boundary_point(square, sector * step),
          square_boundary_point(square, (sector + 1) * step)};
}

std::vector<SlicingTriangle> slicing(const StraightRect& square, int i) {
  require_slicing_order(i, 16);
  std::uint64_t n = 1ull << i;
  std::vector<SlicingTriangle> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(slicing_triangle(square, i, k));
  return out;
}

long long ceil_eps(double x) {
  double nearest = std::round(x);
  if (std::abs(x - nearest) <= eps()) return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(x));
}

int rho(int i) {
  require_slicing_order(i, 24);
  static std::map<int, int> memo;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = memo.find(i);
    if (it != memo.end()) return it->second;
  }
  // Stream over the slicing of the unit square; rho is scale-free.
  StraightRect unit(-0.5, 0.5, -0.5, 0.5);
  std::uint64_t n = 1ull << i;
  double step = kTwoPi / static_cast<double>(n);
  double min_side = std::numeric_limits<double>::infinity();
  double max_side = 0.0;
  Point prev = square_boundary_point(unit, 0.0);
  for (std::uint64_t k = 0; k < n; ++k) {
    Point next = square_boundary_point(unit, (k + 1) * step);
    for (double len : {prev.norm(), next.norm(), (next - prev).norm()}) {
      min_side = std::min(min_side, len);
      max_side = std::max(max_side, len);
    }
    prev = next;
  }
  int value = static_cast<int>(ceil_eps(max_side / min_side));
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  memo.emplace(i, value);
  return value;
}

long long phi(int i) { return static_cast<long long>(i) * rho(i); }

long long index_of(double alpha) {
  if (!(alpha > 0.0 && alpha < kTwoPi)) {
    throw Error(ErrorCode::precondition_violated, "index is defined for angles in (0, 2*pi)");
  }
  long long i = std::max<long long>(3, ceil_eps(std::log2(kTwoPi / alpha)) + 1);
  if (i > 24) throw Error(ErrorCode::guard_exceeded, "slicing order beyond enumeration guard");
  return 4 * phi(static_cast<int>(i));
}

long long psi_of(double beta) { return index_of(kTwoPi - beta); }

double epsilon_exponent(long long psi) {
  if (psi < 1) throw Error(ErrorCode::precondition_violated, "psi must be a positive integer");
  // 0.5 * (1 - ln(4^psi - 1)/ln(4^psi)) = -0.5 * log1p(-4^-psi) / (psi*ln 4)
  double tiny = std::exp2(-2.0 * static_cast<double>(psi));  // 4^-psi
  return -0.5 * std::log1p(-tiny) / (static_cast<double>(psi) * std::log(4.0));
}

namespace {

// Direction u (from the cone vertex) within the closed clockwise sweep of a
// cone of size <= pi; trig-free.
bool dir_in_small_cone(Vec2 p1, Vec2 p2, Vec2 u) {
  return cross(p1, u) <= 0.0 && cross(p2, u) >= 0.0;
}

}  // namespace

bool tile_in_cone(const StraightRect& base, const TileAddress& t, const AngularHint& cone) {
  if (cone.size() > kPi + eps()) {
    throw Error(ErrorCode::precondition_violated, "tile containment needs a cone of size <= pi");
  }
  StraightRect r = tile_rect(base, t);
  Point c = r.center();
  Vec2 p1 = cone.p1(), p2 = cone.p2();
  const double shrink = 1.0 - 1e-9;
  for (Point corner : {r.corner_nw(), r.corner_ne(), r.corner_se(), r.corner_sw()}) {
    Point q = c + (corner - c) * shrink;
    Vec2 u = q - cone.vertex();
    if (u.norm() == 0.0) continue;  // the vertex itself belongs to the cone
    if (!dir_in_small_cone(p1, p2, u)) return false;
  }
  return true;
}

bool tile_in_hint_complement(const StraightRect& base, const TileAddress& t,
                             const AngularHint& hint) {
  return tile_in_cone(base, t, hint.complement());
}

bool tile_in_triangle_interior(const StraightRect& base, const TileAddress& t,
                               const SlicingTriangle& tri) {
  StraightRect r = tile_rect(base, t);
  Point a = tri.apex, b = tri.b0, c = tri.b1;
  double orient = cross(b - a, c - a);
  double sgn = orient >= 0.0 ? 1.0 : -1.0;
  for (Point q : {r.corner_nw(), r.corner_ne(), r.corner_se(), r.corner_sw()}) {
    double margin = eps() * (1.0 + (q - a).norm());
    if (sgn * cross(b - a, q - a) <= margin) return false;
    if (sgn * cross(c - b, q - b) <= margin) return false;
    if (sgn * cross(a - c, q - c) <= margin) return false;
  }
  return true;
}

std::optional<TileAddress> find_tile_in_cone(const StraightRect& base, int level,
                                             const AngularHint& cone) {
  require_square(base);
  require_level(level);
  if (level <= 6) {
    std::uint64_t n = 1ull << level;
    for (std::uint64_t row = 0; row < n; ++row) {
      for (std::uint64_t col = 0; col < n; ++col) {
        TileAddress t{level, col, row};
        if (tile_in_cone(base, t, cone)) return t;
      }
    }
    return std::nullopt;
  }
  // Walk tiles along the cone bisector from the vertex outward and probe a
  // small neighbourhood around each; sound but not exhaustive.
  Vec2 bis = rotate_cw(cone.p1(), cone.size() / 2.0);
  std::uint64_t n = 1ull << level;
  double tile_side = base.width() / static_cast<double>(n);
  double reach = base.width();  // vertex is the square centre in all uses
  for (double d = tile_side; d <= reach; d += tile_side / 2.0) {
    Point probe = cone.vertex() + bis * d;
    if (!base.contains(probe, 0.0)) break;
    TileAddress t0 = tile_at_point(base, level, probe);
    for (std::int64_t dc = -1; dc <= 1; ++dc) {
      for (std::int64_t dr = -1; dr <= 1; ++dr) {
        std::int64_t col = static_cast<std::int64_t>(t0.col) + dc;
        std::int64_t row = static_cast<std::int64_t>(t0.row) + dr;
        if (col < 0 || row < 0 || col >= static_cast<std::int64_t>(n) ||
            row >= static_cast<std::int64_t>(n)) {
          continue;
        }
        TileAddress t{level, static_cast<std::uint64_t>(col), static_cast<std::uint64_t>(row)};
        if (tile_in_cone(base, t, cone)) return t;
      }
    }
  }
  return std::nullopt;
}

TileAddress witness_tile_in_triangle(const StraightRect& square, int i, std::uint64_t sector) {
  require_square(square);
  SlicingTriangle tri = slicing_triangle(square, i, sector);
  long long level_ll = 4 * phi(i);
  if (level_ll > 40) {
    throw Error(ErrorCode::guard_exceeded, "witness level beyond addressable depth");
  }
  int level = static_cast<int>(level_ll);
  std::uint64_t n = 1ull << level;
  double tau = square.width() / static_cast<double>(n);

  // The triangle leans on one square side; identify it from the midpoint of
  // its boundary segment, then take the second tile row off that side and
  // the column under the midpoint of the row's stretch between the two rays.
  Point mid = (tri.b0 + tri.b1) * 0.5;
  Vec2 inward{0.0, 0.0};
  if (std::abs(mid.x - square.east()) <= eps() * (1.0 + square.width())) inward = {-1.0, 0.0};
  else if (std::abs(mid.x - square.west()) <= eps() * (1.0 + square.width())) inward = {1.0, 0.0};
  else if (std::abs(mid.y - square.north()) <= eps() * (1.0 + square.width())) inward = {0.0, -1.0};
  else inward = {0.0, 1.0};

  // Ray positions at inward depth 1.5*tau, interpolated along apex->boundary.
  auto at_depth = [&](Point b, double depth) {
    double full = std::abs(dot(b - tri.apex, inward));  // distance covered inward-wise
    double t = (full - depth) / full;
    return tri.apex + (b - tri.apex) * t;
  };
  Point r0 = at_depth(tri.b0, 1.5 * tau);
  Point r1 = at_depth(tri.b1, 1.5 * tau);
  Point target = (r0 + r1) * 0.5;

  TileAddress t0 = tile_at_point(square, level, target);
  for (std::int64_t dc = -2; dc <= 2; ++dc) {
    for (std::int64_t dr = -2; dr <= 2; ++dr) {
      std::int64_t col = static_cast<std::int64_t>(t0.col) + dc;
      std::int64_t row = static_cast<std::int64_t>(t0.row) + dr;
      if (col < 0 || row < 0 || col >= static_cast<std::int64_t>(n) ||
          row >= static_cast<std::int64_t>(n)) {
        continue;
      }
      TileAddress t{level, static_cast<std::uint64_t>(col), static_cast<std::uint64_t>(row)};
      if (tile_in_triangle_interior(square, t, tri)) return t;
    }
  }
  throw Error(ErrorCode::no_feasible_index, "no witness tile near the boundary row");
}

int empirical_index(double beta, const EmpiricalIndexParams& params) {
  if (!(beta > kPi && beta < kTwoPi)) {
    throw Error(ErrorCode::precondition_violated, "empirical index needs beta in (pi, 2*pi)");
  }
  double alpha = kTwoPi - beta;  // complement size
  StraightRect unit(-0.5, 0.5, -0.5, 0.5);

  std::vector<double> orientations;
  orientations.reserve(params.sweep_steps + params.trials + 64);
  for (int s = 0; s < params.sweep_steps; ++s) {
    orientations.push_back(kTwoPi * s / params.sweep_steps);
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> dist(0.0, kTwoPi);
  for (int s = 0; s < params.trials; ++s) orientations.push_back(dist(rng));
  // Boundary-aligned: a cone edge or the bisector on a grid or diagonal
  // direction.
  for (int g = 0; g < 8; ++g) {
    double axis = g * (kPi / 4.0);
    orientations.push_back(axis);                // p1 on the axis
    orientations.push_back(axis + alpha);        // p2 on the axis
    orientations.push_back(axis + alpha / 2.0);  // bisector on the axis
  }

  for (int k = 1; k <= params.max_index; ++k) {
    bool ok = true;
    for (double theta : orientations) {
      AngularHint cone({0.0, 0.0}, dir_from_angle(theta), alpha);
      if (!find_tile_in_cone(unit, k, cone)) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  throw Error(ErrorCode::no_feasible_index, "no tiling depth up to the cap works for this size");
}

int empirical_index(double beta) {
  static std::map<double, int> memo;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = memo.find(beta);
    if (it != memo.end()) return it->second;
  }
  int value = empirical_index(beta, EmpiricalIndexParams{});
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  memo.emplace(beta, value);
  return value;
}

}  // namespace hunt
