#pragma once

// Hint-free quadratic baseline and the forbidden-angle area audit backing
// the quadratic lower bound: with adversarial hints whose excluded cones
// shrink geometrically, any walk of length D^2/2 leaves a disc point that
// was never excluded and never approached within detection range.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hunt/geom.h"
#include "hunt/hints.h"
#include "hunt/simulator.h"

namespace hunt {

// Square spiral around the origin: axis-aligned arms, consecutive parallel
// arms exactly one unit apart. Pure waypoint generator, truncated once the
// Chebyshev radius exceeds `radius_limit`.
std::vector<Point> spiral_waypoints(double radius_limit);

struct SpiralReport {
  bool found = false;
  double cost = 0.0;
  int rings = 0;  // completed loops
};

// Walk the spiral until detection, the episode budget, or `radius_limit`.
// Hints are ignored entirely.
SpiralReport spiral_search(Episode& ep, double radius_limit = 1 << 20);

struct AreaReport {
  double sum_forbidden_sizes = 0.0;
  double forbidden_disc_area = 0.0;  // area of disc ∩ union of forbidden cones
  double residual_area = 0.0;        // disc, not forbidden, never within range
  std::optional<Point> witness;
  std::uint64_t samples = 0;
};

// Stratified Monte Carlo audit of a forbidden-hint transcript against a
// trajectory. The witness, when the residual is nonempty, is a disc point
// outside every forbidden cone and farther than the detection radius from
// the whole trajectory.
AreaReport forbidden_area_audit(double disc_radius, std::span<const ForbiddenCone> cones,
                                const std::vector<Point>& trajectory,
                                std::uint64_t samples = 1u << 20, std::uint64_t seed = 1);

// Least-squares slope of log(y) against log(x); utility for cost-growth fits.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hunt
