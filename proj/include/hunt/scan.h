#pragma once

// Exhaustive rectangle scan: a snake traversal at unit column spacing that
// brings the agent within distance 1 of every point of the rectangle and
// returns to the start point. Consumes no hints. Works for rectangles in
// any orientation by scanning in the rectangle's own frame, with the long
// side treated as vertical.

#include <vector>

#include "hunt/geom.h"
#include "hunt/simulator.h"

namespace hunt {

enum class ScanOutcome { completed, found, halted };

// Pure waypoint generator (the agent's start point is appended at the end
// for the return leg). `start` must lie in the rectangle.
std::vector<Point> rectangle_scan_waypoints(const OrientedRect& rect, Point start);

ScanOutcome rectangle_scan(Episode& ep, const OrientedRect& rect);
ScanOutcome rectangle_scan(Episode& ep, const StraightRect& rect);

}  // namespace hunt
