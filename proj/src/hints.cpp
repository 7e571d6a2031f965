#include "hunt/hints.h"

#include <algorithm>
#include <cmath>

namespace hunt {

const char* strategy_name(HalfPlaneAdversary::Strategy s) {
  switch (s) {
    case HalfPlaneAdversary::Strategy::perpendicular_worst: return "perpendicular_worst";
    case HalfPlaneAdversary::Strategy::random_honest: return "random_honest";
    case HalfPlaneAdversary::Strategy::fixed_direction: return "fixed_direction";
  }
  return "?";
}

const char* strategy_name(BoundedAngleAdversary::Strategy s) {
  switch (s) {
    case BoundedAngleAdversary::Strategy::edge_worst: return "edge_worst";
    case BoundedAngleAdversary::Strategy::random_honest: return "random_honest";
  }
  return "?";
}

// --- HalfPlaneAdversary ---

HalfPlaneAdversary::HalfPlaneAdversary(Point treasure, Strategy strategy, std::uint64_t seed,
                                       double fixed_angle)
    : treasure_(treasure),
      strategy_(strategy),
      seed_(seed),
      fixed_angle_(fixed_angle),
      rng_(seed) {
  require_finite(treasure, "treasure");
}

HalfPlane HalfPlaneAdversary::query_halfplane(Point pos) {
  require_finite(pos, "query position");
  Vec2 to_treasure = treasure_ - pos;
  if (to_treasure.norm() <= eps()) {
    // At the treasure any orientation is honest; fixed horizontal, up.
    return HalfPlane(Line(pos, {1.0, 0.0}), Side::up);
  }
  switch (strategy_) {
    case Strategy::perpendicular_worst:
      return HalfPlane::from_anchor_normal(pos, to_treasure);
    case Strategy::fixed_direction: {
      Line boundary = Line::from_angle(pos, fixed_angle_);
      double sv = cross(boundary.direction(), to_treasure);
      Vec2 n = boundary.direction().perp();
      if (std::abs(sv) <= eps()) {
        // Treasure on the boundary: both closed sides are honest; pick the
        // canonical one (right, or up for horizontal boundaries).
        n = (std::abs(n.x) <= eps()) ? (n.y > 0.0 ? n : -n) : (n.x > 0.0 ? n : -n);
      } else if (sv < 0.0) {
        n = -n;
      }
      return HalfPlane::from_anchor_normal(pos, n);
    }
    case Strategy::random_honest: {
      std::uniform_real_distribution<double> dist(0.0, kPi);
      Line boundary = Line::from_angle(pos, dist(rng_));
      double sv = cross(boundary.direction(), to_treasure);
      Vec2 n = boundary.direction().perp();
      if (std::abs(sv) <= eps()) {
        n = (std::abs(n.x) <= eps()) ? (n.y > 0.0 ? n : -n) : (n.x > 0.0 ? n : -n);
      } else if (sv < 0.0) {
        n = -n;
      }
      return HalfPlane::from_anchor_normal(pos, n);
    }
  }
  throw Error(ErrorCode::invalid_geometry, "unknown half-plane strategy");
}

OracleDescriptor HalfPlaneAdversary::descriptor() const {
  return {"halfplane", strategy_name(strategy_), std::nullopt, seed_};
}

// --- BoundedAngleAdversary ---

BoundedAngleAdversary::BoundedAngleAdversary(Point treasure, double beta, Strategy strategy,
                                             std::uint64_t seed)
    : treasure_(treasure), beta_(beta), strategy_(strategy), seed_(seed), rng_(seed) {
  require_finite(treasure, "treasure");
  if (!(beta > kPi && beta < kTwoPi)) {
    throw Error(ErrorCode::precondition_violated, "beta must lie in (pi, 2*pi)");
  }
}

AngularHint BoundedAngleAdversary::query(Point pos) {
  require_finite(pos, "query position");
  Vec2 to_treasure = treasure_ - pos;
  if (to_treasure.norm() <= eps()) {
    return AngularHint(pos, {1.0, 0.0}, beta_);
  }
  Vec2 z = to_treasure.normalized();
  switch (strategy_) {
    case Strategy::edge_worst:
      // Treasure sits on the opening ray of the sweep.
      return AngularHint(pos, z, beta_);
    case Strategy::random_honest: {
      std::uniform_real_distribution<double> dist(0.0, beta_);
      return AngularHint(pos, rotate_ccw(z, dist(rng_)), beta_);
    }
  }
  throw Error(ErrorCode::invalid_geometry, "unknown bounded-angle strategy");
}

OracleDescriptor BoundedAngleAdversary::descriptor() const {
  return {"bounded", strategy_name(strategy_), beta_, seed_};
}

// --- ForbiddenAngleAdversary ---

ForbiddenAngleAdversary::ForbiddenAngleAdversary(double disc_radius, std::uint64_t seed)
    : disc_radius_(disc_radius), seed_(seed) {
  if (!(disc_radius > 0.0) || !std::isfinite(disc_radius)) {
    throw Error(ErrorCode::precondition_violated, "disc radius must be positive");
  }
  // Fixed low-discrepancy-ish scoring set: jittered polar grid over the disc.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  const int rings = 64, spokes = 64;
  disc_samples_.reserve(static_cast<std::size_t>(rings) * spokes);
  for (int r = 0; r < rings; ++r) {
    for (int s = 0; s < spokes; ++s) {
      double u = (r + jitter(rng)) / rings;
      double a = (s + jitter(rng)) / spokes * kTwoPi;
      double rad = disc_radius_ * std::sqrt(u);
      disc_samples_.push_back({rad * std::cos(a), rad * std::sin(a)});
    }
  }
}

double ForbiddenAngleAdversary::greedy_direction(Point pos, double size) const {
  // Score 64 candidate bisectors by how many not-yet-forbidden disc samples
  // the new cone would exclude; ties go to the smallest candidate index.
  int best = 0;
  int best_score = -1;
  for (int c = 0; c < 64; ++c) {
    double dir = c * (kTwoPi / 64.0);
    AngularHint cone(pos, dir_from_angle(dir + size / 2.0), size);
    int score = 0;
    for (const Point& q : disc_samples_) {
      if (!cone.contains_or_vertex(q)) continue;
      bool already = false;
      for (const ForbiddenCone& prev : transcript_) {
        if (prev.cone().contains_or_vertex(q)) {
          already = true;
          break;
        }
      }
      if (!already) ++score;
    }
    if (score > best_score) {
      best_score = score;
      best = c;
    }
  }
  return best * (kTwoPi / 64.0);
}

AngularHint ForbiddenAngleAdversary::query(Point pos) {
  require_finite(pos, "query position");
  ++call_count_;
  double size = std::ldexp(1.0, -call_count_);  // 2^-i on the i-th call
  double dir;
  if (pos.norm() > disc_radius_) {
    // Point the forbidden cone straight away from the disc centre; with
    // size < pi/2 it cannot meet the disc.
    dir = std::atan2(pos.y, pos.x);
  } else {
    dir = greedy_direction(pos, size);
  }
  ForbiddenCone fc{pos, dir, size};
  transcript_.push_back(fc);
  return fc.cone().complement();
}

OracleDescriptor ForbiddenAngleAdversary::descriptor() const {
  return {"forbidden", "greedy", std::nullopt, seed_};
}

}  // namespace hunt
