#include "hunt/episode_io.h"

#include <fstream>

#include "json.hpp"

namespace hunt {

namespace {

using nlohmann::json;

json point_json(Point p) { return json::array({p.x, p.y}); }

Point point_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json rect_json(const StraightRect& r) {
  return json::array({r.west(), r.east(), r.south(), r.north()});
}

StraightRect rect_from(const json& j) {
  return StraightRect(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
                      j.at(3).get<double>());
}

}  // namespace

EpisodeRecord export_episode(const Episode& ep, const std::string& algorithm, int phases) {
  EpisodeRecord rec;
  rec.algorithm = algorithm;
  rec.oracle = ep.oracle() ? ep.oracle()->descriptor() : OracleDescriptor{"none", "none", {}, {}};
  rec.treasure = ep.treasure();
  rec.waypoints = ep.trajectory().waypoints;
  for (const HintEvent& e : ep.trajectory().hint_events) {
    Vec2 p1 = e.hint.p1(), p2 = e.hint.p2();
    rec.hints.push_back({e.waypoint_index, e.hint.vertex(), std::atan2(p1.y, p1.x),
                         std::atan2(p2.y, p2.x)});
  }
  rec.cost = ep.ledger().total;
  rec.cost_at_detection = ep.ledger().cost_at_detection;
  rec.found = ep.found();
  rec.phases = phases;
  return rec;
}

MosaicReportRecord to_record(const MosaicReport& r) {
  MosaicReportRecord out;
  out.i = r.i;
  out.k = r.k;
  out.index_max = r.index_max;
  out.passes = r.passes;
  out.tiles_painted = r.tiles_painted;
  out.white_area_after_pass = r.white_area_after_pass;
  out.white_area = r.white_area;
  out.cost = r.cost;
  out.paint_gaps = r.paint_gaps;
  out.final_scan_ran = r.final_scan_ran;
  out.painted_rects = r.black_rects;
  return out;
}

AreaReportRecord to_record(const AreaReport& r) {
  AreaReportRecord out;
  out.sum_forbidden_sizes = r.sum_forbidden_sizes;
  out.forbidden_disc_area = r.forbidden_disc_area;
  out.residual_area = r.residual_area;
  out.witness = r.witness;
  out.samples = r.samples;
  return out;
}

std::string episode_to_json(const EpisodeRecord& rec) {
  json j;
  j["schema"] = rec.schema;
  j["algorithm"] = rec.algorithm;
  json oracle;
  oracle["kind"] = rec.oracle.kind;
  oracle["strategy"] = rec.oracle.strategy;
  if (rec.oracle.beta) oracle["beta"] = *rec.oracle.beta;
  if (rec.oracle.seed) oracle["seed"] = *rec.oracle.seed;
  j["oracle"] = oracle;
  j["treasure"] = rec.treasure ? point_json(*rec.treasure) : json(nullptr);
  json wps = json::array();
  for (Point p : rec.waypoints) wps.push_back(point_json(p));
  j["waypoints"] = wps;
  json hints = json::array();
  for (const HintRecord& h : rec.hints) {
    json e;
    e["at"] = h.at;
    e["vertex"] = point_json(h.vertex);
    e["p1_angle"] = h.p1_angle;
    e["p2_angle"] = h.p2_angle;
    hints.push_back(e);
  }
  j["hints"] = hints;
  j["cost"] = rec.cost;
  if (rec.cost_at_detection) j["cost_at_detection"] = *rec.cost_at_detection;
  j["found"] = rec.found;
  j["phases"] = rec.phases;
  if (!rec.mosaic_reports.empty()) {
    json reports = json::array();
    for (const MosaicReportRecord& m : rec.mosaic_reports) {
      json e;
      e["i"] = m.i;
      e["k"] = m.k;
      e["index_max"] = m.index_max;
      e["passes"] = m.passes;
      e["tiles_painted"] = m.tiles_painted;
      e["white_area_after_pass"] = m.white_area_after_pass;
      e["white_area"] = m.white_area;
      e["cost"] = m.cost;
      e["paint_gaps"] = m.paint_gaps;
      e["final_scan_ran"] = m.final_scan_ran;
      json rects = json::array();
      for (const StraightRect& r : m.painted_rects) rects.push_back(rect_json(r));
      e["painted_rects"] = rects;
      reports.push_back(e);
    }
    j["mosaic_reports"] = reports;
  }
  if (rec.area_report) {
    json a;
    a["sum_forbidden_sizes"] = rec.area_report->sum_forbidden_sizes;
    a["forbidden_disc_area"] = rec.area_report->forbidden_disc_area;
    a["residual_area"] = rec.area_report->residual_area;
    a["witness"] = rec.area_report->witness ? point_json(*rec.area_report->witness) : json(nullptr);
    a["samples"] = rec.area_report->samples;
    j["area_report"] = a;
  }
  return j.dump(2) + "\n";
}

EpisodeRecord episode_from_json(const std::string& text) {
  json j = json::parse(text);
  EpisodeRecord rec;
  rec.schema = j.at("schema").get<int>();
  rec.algorithm = j.at("algorithm").get<std::string>();
  const json& oracle = j.at("oracle");
  rec.oracle.kind = oracle.at("kind").get<std::string>();
  rec.oracle.strategy = oracle.at("strategy").get<std::string>();
  if (oracle.contains("beta")) rec.oracle.beta = oracle.at("beta").get<double>();
  if (oracle.contains("seed")) rec.oracle.seed = oracle.at("seed").get<std::uint64_t>();
  if (!j.at("treasure").is_null()) rec.treasure = point_from(j.at("treasure"));
  for (const json& p : j.at("waypoints")) rec.waypoints.push_back(point_from(p));
  for (const json& e : j.at("hints")) {
    rec.hints.push_back({e.at("at").get<std::size_t>(), point_from(e.at("vertex")),
                         e.at("p1_angle").get<double>(), e.at("p2_angle").get<double>()});
  }
  rec.cost = j.at("cost").get<double>();
  if (j.contains("cost_at_detection")) rec.cost_at_detection = j.at("cost_at_detection").get<double>();
  rec.found = j.at("found").get<bool>();
  rec.phases = j.at("phases").get<int>();
  if (j.contains("mosaic_reports")) {
    for (const json& e : j.at("mosaic_reports")) {
      MosaicReportRecord m;
      m.i = e.at("i").get<int>();
      m.k = e.at("k").get<long long>();
      m.index_max = e.at("index_max").get<long long>();
      m.passes = e.at("passes").get<int>();
      m.tiles_painted = e.at("tiles_painted").get<std::vector<int>>();
      m.white_area_after_pass = e.at("white_area_after_pass").get<std::vector<double>>();
      m.white_area = e.at("white_area").get<double>();
      m.cost = e.at("cost").get<double>();
      m.paint_gaps = e.at("paint_gaps").get<int>();
      m.final_scan_ran = e.at("final_scan_ran").get<bool>();
      for (const json& r : e.at("painted_rects")) m.painted_rects.push_back(rect_from(r));
      rec.mosaic_reports.push_back(std::move(m));
    }
  }
  if (j.contains("area_report")) {
    const json& a = j.at("area_report");
    AreaReportRecord rep;
    rep.sum_forbidden_sizes = a.at("sum_forbidden_sizes").get<double>();
    rep.forbidden_disc_area = a.at("forbidden_disc_area").get<double>();
    rep.residual_area = a.at("residual_area").get<double>();
    if (!a.at("witness").is_null()) rep.witness = point_from(a.at("witness"));
    rep.samples = a.at("samples").get<std::uint64_t>();
    rec.area_report = rep;
  }
  return rec;
}

void save_episode(const EpisodeRecord& record, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for writing: " + path);
  out << episode_to_json(record);
  if (!out) throw Error(ErrorCode::io_error, "write failed: " + path);
}

EpisodeRecord load_episode(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open for reading: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return episode_from_json(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::io_error, std::string("malformed episode file: ") + e.what());
  }
}

}  // namespace hunt
