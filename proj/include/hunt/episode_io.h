#pragma once

// Episode records: a stable JSON schema (versioned, `schema: 1`) holding
// the full run transcript (waypoints, hints, costs, detection, per-phase
// painting reports), plus save/load helpers.

#include <optional>
#include <string>
#include <vector>

#include "hunt/baseline.h"
#include "hunt/mosaic.h"
#include "hunt/simulator.h"

namespace hunt {

struct HintRecord {
  std::size_t at = 0;  // waypoint index
  Point vertex;
  double p1_angle = 0.0;
  double p2_angle = 0.0;
};

struct MosaicReportRecord {
  int i = 0;
  long long k = 0;
  long long index_max = 0;
  int passes = 0;
  std::vector<int> tiles_painted;
  std::vector<double> white_area_after_pass;
  double white_area = 0.0;
  double cost = 0.0;
  int paint_gaps = 0;
  bool final_scan_ran = false;
  std::vector<StraightRect> painted_rects;
};

struct AreaReportRecord {
  double sum_forbidden_sizes = 0.0;
  double forbidden_disc_area = 0.0;
  double residual_area = 0.0;
  std::optional<Point> witness;
  std::uint64_t samples = 0;
};

struct EpisodeRecord {
  int schema = 1;
  std::string algorithm;
  OracleDescriptor oracle;
  std::optional<Point> treasure;
  std::vector<Point> waypoints;
  std::vector<HintRecord> hints;
  double cost = 0.0;
  std::optional<double> cost_at_detection;
  bool found = false;
  int phases = 0;
  std::vector<MosaicReportRecord> mosaic_reports;
  std::optional<AreaReportRecord> area_report;
};

EpisodeRecord export_episode(const Episode& ep, const std::string& algorithm, int phases);

MosaicReportRecord to_record(const MosaicReport& r);
AreaReportRecord to_record(const AreaReport& r);

std::string episode_to_json(const EpisodeRecord& record);
EpisodeRecord episode_from_json(const std::string& text);

void save_episode(const EpisodeRecord& record, const std::string& path);
EpisodeRecord load_episode(const std::string& path);

}  // namespace hunt
