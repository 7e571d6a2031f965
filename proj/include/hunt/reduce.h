#pragma once

// Half-plane hint machinery: the configuration taxonomy, the eight
// elementary transformations that map any configuration onto a basic one,
// the rectangle-reduction step (one or two hints plus at most two small
// scans, shaving at least 2 off the perimeter at travel cost linear in the
// shave), and the doubling-phase hunt built on it.

#include <array>
#include <optional>
#include <vector>

#include "hunt/geom.h"
#include "hunt/scan.h"
#include "hunt/simulator.h"

namespace hunt {

enum class Posture { lying, standing };
enum class Perfection { perfect, imperfect };

struct ConfigClass {
  Posture posture;
  Perfection perfection;
  int type_id;  // 1..4; perfect configurations only take 1..2
  bool critical;
};

// A straight rectangle with a half-plane hint anchored at its centre.
struct Configuration {
  Configuration(StraightRect r, HalfPlane h);
  StraightRect rect;
  HalfPlane hint;
};

ConfigClass classify(const Configuration& config);
bool is_basic(const ConfigClass& c);

// Elementary transformation phi_k, k in 0..7: a quarter-turn rotation about
// the rectangle centre (k mod 4 turns, counterclockwise), composed for
// k >= 4 with the reflection about the vertical line through the centre.
class ConfigTransform {
 public:
  ConfigTransform(Point pivot, int k);

  int index() const { return k_; }
  Point apply(Point p) const;
  Point apply_inverse(Point p) const;
  Vec2 apply_dir(Vec2 v) const;
  StraightRect apply(const StraightRect& r) const;
  StraightRect apply_inverse(const StraightRect& r) const;
  HalfPlane apply(const HalfPlane& h) const;
  Configuration apply(const Configuration& c) const;
  OrientedRect apply_inverse(const OrientedRect& r) const;

 private:
  Point pivot_;
  int k_;
  int quarter_turns_;
  bool reflect_;
};

struct BasicTransformResult {
  ConfigTransform transform;
  Configuration transformed;
};

// Smallest k such that phi_k maps the configuration onto a basic one.
BasicTransformResult basic_transformation(const Configuration& config);

struct ReduceReport {
  StraightRect rect;
  bool critical = false;
  int case_id = 0;  // 0 for the non-critical path, else 1..6
  double travel = 0.0;
  double perimeter_drop = 0.0;
  bool found = false;
};

// One reduction step from the centre of R (every side of R must be >= 4).
// Unless detection fires, returns a straight sub-rectangle that still holds
// the treasure, with the agent standing at its centre.
ReduceReport reduce_rectangle(Episode& ep, const StraightRect& rect);

struct HalfPlaneHuntReport {
  bool found = false;
  double cost = 0.0;
  int phases = 0;
  std::vector<double> phase_costs;
  std::array<int, 7> case_counts{};  // [0] non-critical, [1..6] critical cases
  int reduce_calls = 0;
};

struct HalfPlaneHuntOptions {
  int max_phases = 48;
};

HalfPlaneHuntReport treasure_hunt_halfplane(Episode& ep, const HalfPlaneHuntOptions& options = {});

}  // namespace hunt
