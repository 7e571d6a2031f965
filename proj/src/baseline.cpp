#include "hunt/baseline.h"

#include <algorithm>
#include <cmath>
#include <random>

namespace hunt {

std::vector<Point> spiral_waypoints(double radius_limit) {
  std::vector<Point> wp;
  wp.push_back({0.0, 0.0});
  Point pos{0.0, 0.0};
  static const Vec2 dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int arm = 0;
  while (true) {
    double len = static_cast<double>(arm / 2 + 1);
    pos = pos + dirs[arm % 4] * len;
    wp.push_back(pos);
    if (std::max(std::abs(pos.x), std::abs(pos.y)) > radius_limit) break;
    ++arm;
  }
  return wp;
}

SpiralReport spiral_search(Episode& ep, double radius_limit) {
  SpiralReport report;
  if (ep.found()) {
    report.found = true;
    return report;
  }
  Point pos = ep.position();
  if (pos.norm() > eps()) {
    throw Error(ErrorCode::precondition_violated, "spiral search starts at the origin");
  }
  static const Vec2 dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  int arm = 0;
  while (true) {
    double len = static_cast<double>(arm / 2 + 1);
    pos = pos + dirs[arm % 4] * len;
    if (ep.move_to(pos) != MoveOutcome::arrived) break;
    if (std::max(std::abs(pos.x), std::abs(pos.y)) > radius_limit) {
      if (!ep.treasure() && !ep.options().budget) break;
      throw Error(ErrorCode::budget_exceeded, "spiral grew past the radius limit");
    }
    ++arm;
  }
  report.found = ep.found();
  report.cost = ep.ledger().total;
  report.rings = arm / 4;
  return report;
}

namespace {

double dist_to_polyline(Point p, const std::vector<Point>& poly) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < poly.size(); ++i) {
    best = std::min(best, dist_point_segment(p, poly[i - 1], poly[i]));
    if (best == 0.0) break;
  }
  return best;
}

}  // namespace

AreaReport forbidden_area_audit(double disc_radius, std::span<const ForbiddenCone> cones,
                                const std::vector<Point>& trajectory, std::uint64_t samples,
                                std::uint64_t seed) {
  if (!(disc_radius > 0.0)) {
    throw Error(ErrorCode::precondition_violated, "disc radius must be positive");
  }
  AreaReport report;
  for (const ForbiddenCone& c : cones) report.sum_forbidden_sizes += c.size;

  const std::uint64_t grid = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(samples)))));
  const double cell = 2.0 * disc_radius / static_cast<double>(grid);
  const double cell_area = cell * cell;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);

  std::uint64_t in_forbidden = 0, in_residual = 0;
  // Strata visited in fixed row-major order; the witness is the first
  // residual point found, so reruns with one seed reproduce it exactly.
  for (std::uint64_t gy = 0; gy < grid; ++gy) {
    for (std::uint64_t gx = 0; gx < grid; ++gx) {
      Point p{-disc_radius + (static_cast<double>(gx) + jitter(rng)) * cell,
              -disc_radius + (static_cast<double>(gy) + jitter(rng)) * cell};
      ++report.samples;
      if (p.norm() > disc_radius) continue;
      bool forbidden = false;
      for (const ForbiddenCone& c : cones) {
        if (c.cone().contains_or_vertex(p)) {
          forbidden = true;
          break;
        }
      }
      if (forbidden) {
        ++in_forbidden;
        continue;
      }
      double d = dist_to_polyline(p, trajectory);
      if (d > kDetectionRadius + 1e-6) {
        ++in_residual;
        if (!report.witness) report.witness = p;
      }
    }
  }
  report.forbidden_disc_area = static_cast<double>(in_forbidden) * cell_area;
  report.residual_area = static_cast<double>(in_residual) * cell_area;
  return report;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::precondition_violated, "slope fit needs matching samples");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace hunt
