#include "hunt/svg_render.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hunt {

namespace {

struct Bounds {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  void grow(Point p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_episode_svg(const EpisodeRecord& rec) {
  Bounds b;
  for (Point p : rec.waypoints) b.grow(p);
  if (rec.treasure) {
    b.grow(*rec.treasure + Vec2{kDetectionRadius, kDetectionRadius});
    b.grow(*rec.treasure - Vec2{kDetectionRadius, kDetectionRadius});
  }
  for (const auto& m : rec.mosaic_reports) {
    for (const StraightRect& r : m.painted_rects) {
      b.grow(r.corner_sw());
      b.grow(r.corner_ne());
    }
  }
  double span = std::max({b.max_x - b.min_x, b.max_y - b.min_y, 1.0});
  double pad = 0.05 * span;
  double w = (b.max_x - b.min_x) + 2 * pad, h = (b.max_y - b.min_y) + 2 * pad;

  // World y grows north; SVG y grows down.
  auto X = [&](double x) { return x - b.min_x + pad; };
  auto Y = [&](double y) { return (b.max_y + pad) - y; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h)
      << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
      << "\" fill=\"white\"/>\n";

  // Painted tiles from the last phase that painted anything.
  for (auto it = rec.mosaic_reports.rbegin(); it != rec.mosaic_reports.rend(); ++it) {
    if (it->painted_rects.empty()) continue;
    for (const StraightRect& r : it->painted_rects) {
      out << "<rect x=\"" << fmt(X(r.west())) << "\" y=\"" << fmt(Y(r.north())) << "\" width=\""
          << fmt(r.width()) << "\" height=\"" << fmt(r.height())
          << "\" fill=\"#444444\" fill-opacity=\"0.35\"/>\n";
    }
    break;
  }

  // Hint wedges: short rays plus a sampled arc.
  double ray_len = 0.08 * span;
  for (const HintRecord& hint : rec.hints) {
    double sweep = std::fmod(hint.p1_angle - hint.p2_angle, kTwoPi);
    if (sweep < 0) sweep += kTwoPi;
    if (sweep == 0.0) sweep = kTwoPi / 2.0;
    out << "<path d=\"M " << fmt(X(hint.vertex.x)) << " " << fmt(Y(hint.vertex.y));
    const int steps = 24;
    for (int s = 0; s <= steps; ++s) {
      double a = hint.p1_angle - sweep * s / steps;
      Point q = hint.vertex + dir_from_angle(a) * ray_len;
      out << " L " << fmt(X(q.x)) << " " << fmt(Y(q.y));
    }
    out << " Z\" fill=\"#2d7dd2\" fill-opacity=\"0.12\" stroke=\"#2d7dd2\" "
           "stroke-opacity=\"0.4\" stroke-width=\""
        << fmt(0.002 * span) << "\"/>\n";
  }

  // Trajectory.
  out << "<polyline points=\"";
  for (std::size_t i = 0; i < rec.waypoints.size(); ++i) {
    if (i) out << " ";
    out << fmt(X(rec.waypoints[i].x)) << "," << fmt(Y(rec.waypoints[i].y));
  }
  out << "\" fill=\"none\" stroke=\"#c02f1d\" stroke-width=\"" << fmt(0.004 * span) << "\"/>\n";

  if (rec.treasure) {
    out << "<circle cx=\"" << fmt(X(rec.treasure->x)) << "\" cy=\"" << fmt(Y(rec.treasure->y))
        << "\" r=\"" << fmt(kDetectionRadius)
        << "\" fill=\"#1a9850\" fill-opacity=\"0.25\" stroke=\"#1a9850\" stroke-width=\""
        << fmt(0.003 * span) << "\"/>\n";
    out << "<circle cx=\"" << fmt(X(rec.treasure->x)) << "\" cy=\"" << fmt(Y(rec.treasure->y))
        << "\" r=\"" << fmt(0.008 * span) << "\" fill=\"#1a9850\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void save_episode_svg(const EpisodeRecord& record, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for writing: " + path);
  out << render_episode_svg(record);
  if (!out) throw Error(ErrorCode::io_error, "write failed: " + path);
}

}  // namespace hunt
