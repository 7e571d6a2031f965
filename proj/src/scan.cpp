#include "hunt/scan.h"

#include <cmath>

namespace hunt {

namespace {

// Scan frame: origin at the rectangle's "north-west" corner, `across`
// pointing along the short side (the column spacing direction), `down`
// pointing along the long side. Columns hang from the north edge.
struct ScanFrame {
  Point nw;
  Vec2 across;  // unit, short side, length m
  Vec2 down;    // unit, long side, length n
  double m, n;
};

ScanFrame make_frame(const OrientedRect& rect) {
  ScanFrame f;
  if (rect.side_u() >= rect.side_v()) {
    f.m = rect.side_v();
    f.n = rect.side_u();
    f.across = rect.axis_v();
    f.down = rect.axis_u();
  } else {
    f.m = rect.side_u();
    f.n = rect.side_v();
    f.across = rect.axis_u();
    f.down = rect.axis_v();
  }
  f.nw = rect.center() - f.across * (f.m / 2.0) - f.down * (f.n / 2.0);
  return f;
}

}  // namespace

std::vector<Point> rectangle_scan_waypoints(const OrientedRect& rect, Point start) {
  if (!rect.contains(start, eps() * (1.0 + rect.max_side()))) {
    throw Error(ErrorCode::start_outside_rectangle, "scan must start inside the rectangle");
  }
  ScanFrame f = make_frame(rect);
  int k = static_cast<int>(std::floor(f.m));

  auto col_top = [&](int i) { return f.nw + f.across * static_cast<double>(i); };
  auto col_bottom = [&](int i) { return col_top(i) + f.down * f.n; };

  std::vector<Point> wp;
  wp.reserve(static_cast<std::size_t>(2 * (k + 2)) + 2);
  if (k % 2 == 1) {
    for (int i = 0; i + 1 <= k; i += 2) {
      wp.push_back(col_top(i));
      wp.push_back(col_bottom(i));
      wp.push_back(col_bottom(i + 1));
      wp.push_back(col_top(i + 1));
    }
  } else {
    for (int i = 0; i + 1 <= k - 1; i += 2) {
      wp.push_back(col_top(i));
      wp.push_back(col_bottom(i));
      wp.push_back(col_bottom(i + 1));
      wp.push_back(col_top(i + 1));
    }
    wp.push_back(col_top(k));
    wp.push_back(col_bottom(k));
  }
  wp.push_back(start);
  return wp;
}

ScanOutcome rectangle_scan(Episode& ep, const OrientedRect& rect) {
  std::vector<Point> wp = rectangle_scan_waypoints(rect, ep.position());
  for (const Point& p : wp) {
    switch (ep.move_to(p)) {
      case MoveOutcome::found_at: return ScanOutcome::found;
      case MoveOutcome::budget_exceeded: return ScanOutcome::halted;
      case MoveOutcome::arrived: break;
    }
  }
  return ScanOutcome::completed;
}

ScanOutcome rectangle_scan(Episode& ep, const StraightRect& rect) {
  return rectangle_scan(ep, OrientedRect::from_straight(rect));
}

}  // namespace hunt
