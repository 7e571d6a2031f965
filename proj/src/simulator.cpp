#include "hunt/simulator.h"

#include <algorithm>
#include <cmath>

namespace hunt {

double Trajectory::length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    total += (waypoints[i] - waypoints[i - 1]).norm();
  }
  return total;
}

std::optional<double> earliest_detection_parameter(Point a, Point b, Point z, double radius) {
  Vec2 d = b - a;
  Vec2 w = a - z;
  double c0 = w.squared_norm() - radius * radius;
  if (c0 <= 0.0) return 0.0;  // already within range at the segment start
  double qa = d.squared_norm();
  if (qa == 0.0) return std::nullopt;
  double qb = dot(w, d);  // half the linear coefficient
  double disc = qb * qb - qa * c0;
  if (disc < 0.0) return std::nullopt;
  double t = (-qb - std::sqrt(disc)) / qa;
  if (t < 0.0 || t > 1.0) return std::nullopt;
  return t;
}

Episode::Episode(std::optional<Point> treasure, HintOracle* oracle, EpisodeOptions options)
    : treasure_(treasure), oracle_(oracle), options_(options) {
  trajectory_.waypoints.push_back({0.0, 0.0});
  if (treasure_) {
    require_finite(*treasure_, "treasure");
    if ((*treasure_).norm() <= kDetectionRadius) {
      found_ = true;
      ledger_.cost_at_detection = 0.0;
    }
  }
}

MoveOutcome Episode::move_to(Point target) {
  if (found_) throw Error(ErrorCode::move_after_found, "move after the treasure was found");
  if (budget_hit_) throw Error(ErrorCode::budget_exceeded, "move after the budget was exhausted");
  require_finite(target, "move target");

  Point a = position();
  double seg_len = (target - a).norm();

  std::optional<double> t_hit;
  if (treasure_) t_hit = earliest_detection_parameter(a, target, *treasure_, kDetectionRadius);

  if (t_hit) {
    double cost_at = ledger_.total + *t_hit * seg_len;
    if (options_.budget && cost_at > *options_.budget) {
      double remaining = *options_.budget - ledger_.total;
      double t_stop = seg_len > 0.0 ? remaining / seg_len : 0.0;
      trajectory_.waypoints.push_back(a + (target - a) * t_stop);
      ledger_.total = *options_.budget;
      budget_hit_ = true;
      return MoveOutcome::budget_exceeded;
    }
    trajectory_.waypoints.push_back(a + (target - a) * *t_hit);
    ledger_.total = cost_at;
    ledger_.cost_at_detection = cost_at;
    found_ = true;
    return MoveOutcome::found_at;
  }

  if (options_.budget && ledger_.total + seg_len > *options_.budget) {
    double remaining = *options_.budget - ledger_.total;
    double t_stop = seg_len > 0.0 ? std::clamp(remaining / seg_len, 0.0, 1.0) : 0.0;
    trajectory_.waypoints.push_back(a + (target - a) * t_stop);
    ledger_.total = *options_.budget;
    budget_hit_ = true;
    return MoveOutcome::budget_exceeded;
  }

  trajectory_.waypoints.push_back(target);
  ledger_.total += seg_len;
  return MoveOutcome::arrived;
}

AngularHint Episode::get_hint() {
  if (found_) throw Error(ErrorCode::move_after_found, "hint requested after detection");
  if (!oracle_) throw Error(ErrorCode::precondition_violated, "episode has no oracle");
  AngularHint hint = oracle_->query(position());
  if (options_.check_honesty && treasure_) {
    if (!hint.contains_or_vertex(*treasure_)) {
      throw Error(ErrorCode::oracle_dishonest, "oracle reply excludes the treasure");
    }
  }
  trajectory_.hint_events.push_back({trajectory_.waypoints.size() - 1, hint});
  return hint;
}

}  // namespace hunt
