#pragma once

// Invariant suites behind the `verify` command: randomized checks of every
// module's contracts, each reporting the measured value against its bound.
// Also home of the polyline coverage checker used as an independent oracle
// by the test suites (it only ever sees waypoints, never the procedures
// that produced them).

#include <iosfwd>
#include <string>
#include <vector>

#include "hunt/geom.h"

namespace hunt {

struct CheckResult {
  std::string module;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string detail;
};

// Max over grid points (pitch-spaced) of the rectangle of the distance to
// the polyline; uses a uniform spatial hash over segments.
double max_coverage_distance(const std::vector<Point>& polyline, const OrientedRect& rect,
                             double pitch);
bool polyline_covers_rect(const std::vector<Point>& polyline, const OrientedRect& rect,
                          double pitch, double radius);

std::vector<CheckResult> verify_geom();
std::vector<CheckResult> verify_hints();
std::vector<CheckResult> verify_simulator();
std::vector<CheckResult> verify_scan();
std::vector<CheckResult> verify_reduce();
std::vector<CheckResult> verify_tiling();
std::vector<CheckResult> verify_mosaic();
std::vector<CheckResult> verify_baseline();

std::vector<CheckResult> verify_all();

// Prints one line per check; returns true when everything passed.
bool report_checks(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace hunt
