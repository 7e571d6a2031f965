#pragma once

// Episode engine: executes straight moves against a hint oracle, accrues
// cost, and detects the treasure continuously along segments. Detection
// fires at the earliest point of the trajectory at distance <= 1 from the
// treasure; the trajectory is truncated there and the episode halts.

#include <cstddef>
#include <optional>
#include <vector>

#include "hunt/geom.h"
#include "hunt/hints.h"

namespace hunt {

inline constexpr double kDetectionRadius = 1.0;

struct HintEvent {
  std::size_t waypoint_index;
  AngularHint hint;
};

struct Trajectory {
  std::vector<Point> waypoints;  // starts at O = (0, 0)
  std::vector<HintEvent> hint_events;
  double length() const;
};

struct CostLedger {
  double total = 0.0;
  std::optional<double> cost_at_detection;
};

enum class MoveOutcome { arrived, found_at, budget_exceeded };

struct EpisodeOptions {
  std::optional<double> budget;
  bool check_honesty = true;  // assert every reply contains the treasure
};

class Episode {
 public:
  Episode(std::optional<Point> treasure, HintOracle* oracle, EpisodeOptions options = {});

  MoveOutcome move_to(Point target);
  AngularHint get_hint();

  Point position() const { return trajectory_.waypoints.back(); }
  bool found() const { return found_; }
  bool halted() const { return found_ || budget_hit_; }
  bool budget_exceeded() const { return budget_hit_; }
  std::optional<Point> treasure() const { return treasure_; }
  const Trajectory& trajectory() const { return trajectory_; }
  const CostLedger& ledger() const { return ledger_; }
  HintOracle* oracle() const { return oracle_; }
  const EpisodeOptions& options() const { return options_; }

 private:
  std::optional<Point> treasure_;
  HintOracle* oracle_;
  EpisodeOptions options_;
  Trajectory trajectory_;
  CostLedger ledger_;
  bool found_ = false;
  bool budget_hit_ = false;
};

// Earliest parameter t in [0, 1] at which |a + t*(b-a) - z| <= radius, if any.
std::optional<double> earliest_detection_parameter(Point a, Point b, Point z, double radius);

}  // namespace hunt
