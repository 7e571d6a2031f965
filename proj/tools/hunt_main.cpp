// Experiment runner: single episodes (half-plane hints, bounded angles,
// spiral baseline), parameter sweeps to CSV, invariant verification, and
// SVG rendering of recorded episodes.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hunt/baseline.h"
#include "hunt/episode_io.h"
#include "hunt/mosaic.h"
#include "hunt/reduce.h"
#include "hunt/svg_render.h"
#include "hunt/verify.h"

namespace {

using namespace hunt;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitTileBudget = 3;
constexpr int kExitIo = 4;
constexpr int kExitModuleError = 5;

Point resolve_treasure(const std::string& treasure_flag, double distance, std::uint64_t seed) {
  if (!treasure_flag.empty()) {
    double x = 0, y = 0;
    if (std::sscanf(treasure_flag.c_str(), "%lf,%lf", &x, &y) != 2) {
      throw CLI::ValidationError("--treasure expects x,y");
    }
    return {x, y};
  }
  if (distance <= 0.0) {
    throw CLI::ValidationError("give either --treasure x,y or --distance D");
  }
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 12345);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  return dir_from_angle(ang(rng)) * distance;
}

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct SweepRow {
  double d = 0;
  std::uint64_t seed = 0;
  double cost = 0;
  bool found = false;
  int phases = 0;
};

int run_sweep(const std::string& algo, double beta, double dmin, double dmax, int seeds,
              const std::string& adversary, IndexMode mode, int jobs, const std::string& out_path) {
  std::vector<double> ds;
  for (double d = dmin; d <= dmax * (1 + 1e-12); d *= 2.0) ds.push_back(d);
  struct Task {
    double d;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (double d : ds) {
    for (int s = 0; s < seeds; ++s) tasks.push_back({d, static_cast<std::uint64_t>(s)});
  }
  std::vector<SweepRow> rows(tasks.size());

  auto run_one = [&](std::size_t idx) {
    const Task& t = tasks[idx];
    Point z = resolve_treasure("", t.d, t.seed * 997 + static_cast<std::uint64_t>(t.d));
    SweepRow row{t.d, t.seed, 0, false, 0};
    if (algo == "hunt1") {
      HalfPlaneAdversary::Strategy strat = HalfPlaneAdversary::Strategy::perpendicular_worst;
      if (adversary == "random") strat = HalfPlaneAdversary::Strategy::random_honest;
      if (adversary == "fixed") strat = HalfPlaneAdversary::Strategy::fixed_direction;
      HalfPlaneAdversary adv(z, strat, t.seed, 0.7);
      Episode ep(z, &adv);
      HalfPlaneHuntReport rep = treasure_hunt_halfplane(ep);
      row.cost = rep.cost;
      row.found = rep.found;
      row.phases = rep.phases;
    } else if (algo == "hunt2") {
      BoundedAngleAdversary::Strategy strat = BoundedAngleAdversary::Strategy::random_honest;
      if (adversary == "edge") strat = BoundedAngleAdversary::Strategy::edge_worst;
      BoundedAngleAdversary adv(z, beta, strat, t.seed);
      Episode ep(z, &adv);
      BoundedHuntOptions opt;
      opt.mosaic.mode = mode;
      BoundedHuntReport rep = treasure_hunt_bounded(ep, opt);
      row.cost = rep.cost;
      row.found = rep.found;
      row.phases = rep.phases;
    } else {  // spiral baseline
      Episode ep(z, nullptr);
      SpiralReport rep = spiral_search(ep);
      row.cost = rep.cost;
      row.found = rep.found;
      row.phases = rep.rings;
    }
    rows[idx] = row;
  };

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < tasks.size(); idx = next.fetch_add(1)) {
      run_one(idx);
    }
  };
  int n_threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot open for writing: " + out_path);
  out << "D,seed,cost,found,phases\n";
  for (const SweepRow& r : rows) {
    out << fmt9(r.d) << "," << r.seed << "," << fmt9(r.cost) << "," << (r.found ? 1 : 0) << ","
        << r.phases << "\n";
  }
  std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"treasure hunt in the plane with angular hints"};
  app.require_subcommand(1);

  std::string treasure_flag, out_path, in_path, adversary, index_mode = "empirical";
  double distance = 0.0, beta = 3 * kPi / 2, angle = 0.7, budget = 0.0;
  double dmin = 4.0, dmax = 64.0;
  std::uint64_t seed = 0, samples = 1u << 20;
  std::uint64_t tile_budget = 1ull << 24;
  int seeds = 5, jobs = 1;
  bool audit = false;
  double walk_budget = 0.0;
  std::string algo = "hunt1";

  auto* hunt1 = app.add_subcommand("hunt1", "half-plane hints, linear-cost hunt");
  hunt1->add_option("--treasure", treasure_flag, "treasure as x,y");
  hunt1->add_option("--distance", distance, "treasure distance (seeded random direction)");
  hunt1->add_option("--seed", seed, "seed for direction and oracle");
  hunt1->add_option("--adversary", adversary, "perp|random|fixed")->default_val("perp");
  hunt1->add_option("--angle", angle, "boundary angle for the fixed adversary");
  hunt1->add_option("--budget", budget, "optional cost budget");
  hunt1->add_option("--out", out_path, "episode JSON path");

  auto* hunt2 = app.add_subcommand("hunt2", "bounded angles, subquadratic hunt");
  hunt2->add_option("--treasure", treasure_flag, "treasure as x,y");
  hunt2->add_option("--distance", distance, "treasure distance (seeded random direction)");
  hunt2->add_option("--seed", seed, "seed for direction and oracle");
  hunt2->add_option("--beta", beta, "hint size bound in (pi, 2*pi)");
  hunt2->add_option("--adversary", adversary, "edge|random")->default_val("edge");
  hunt2->add_option("--index-mode", index_mode, "empirical|exact");
  hunt2->add_option("--tile-budget", tile_budget, "admissible finest-tiling leaves");
  hunt2->add_option("--budget", budget, "optional cost budget");
  hunt2->add_option("--out", out_path, "episode JSON path");

  auto* baseline = app.add_subcommand("baseline", "hint-free spiral / forbidden-angle audit");
  baseline->add_option("--treasure", treasure_flag, "treasure as x,y");
  baseline->add_option("--distance", distance, "treasure distance or audit disc radius");
  baseline->add_option("--seed", seed, "seed");
  baseline->add_flag("--audit", audit, "walk against the forbidden-angle adversary and audit");
  baseline->add_option("--walk-budget", walk_budget, "audit walk length (default D^2/2)");
  baseline->add_option("--samples", samples, "Monte Carlo samples for the audit");
  baseline->add_option("--out", out_path, "episode JSON path");

  auto* sweep = app.add_subcommand("sweep", "grid over D and seeds, CSV summary");
  sweep->add_option("--algo", algo, "hunt1|hunt2|baseline")->required();
  sweep->add_option("--beta", beta, "hint size bound for hunt2");
  sweep->add_option("--dmin", dmin, "smallest distance (doubled up to --dmax)");
  sweep->add_option("--dmax", dmax, "largest distance");
  sweep->add_option("--seeds", seeds, "seeds per distance");
  sweep->add_option("--adversary", adversary, "strategy name");
  sweep->add_option("--index-mode", index_mode, "empirical|exact");
  sweep->add_option("--jobs", jobs, "concurrent episodes");
  sweep->add_option("--out", out_path, "CSV path")->required();

  auto* verify = app.add_subcommand("verify", "run all invariant suites");

  auto* render = app.add_subcommand("render", "episode JSON to SVG");
  render->add_option("--in", in_path, "episode JSON path")->required();
  render->add_option("--out", out_path, "SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(hunt1)) {
      Point z = resolve_treasure(treasure_flag, distance, seed);
      HalfPlaneAdversary::Strategy strat = HalfPlaneAdversary::Strategy::perpendicular_worst;
      if (adversary == "random") strat = HalfPlaneAdversary::Strategy::random_honest;
      if (adversary == "fixed") strat = HalfPlaneAdversary::Strategy::fixed_direction;
      HalfPlaneAdversary adv(z, strat, seed, angle);
      EpisodeOptions opts;
      if (budget > 0) opts.budget = budget;
      Episode ep(z, &adv, opts);
      HalfPlaneHuntReport rep = treasure_hunt_halfplane(ep);
      std::cout << (rep.found ? "found" : "not found") << " cost=" << fmt9(rep.cost)
                << " phases=" << rep.phases << "\n";
      if (!out_path.empty()) save_episode(export_episode(ep, "hunt1", rep.phases), out_path);
      return rep.found ? 0 : kExitModuleError;
    }
    if (app.got_subcommand(hunt2)) {
      Point z = resolve_treasure(treasure_flag, distance, seed);
      BoundedAngleAdversary::Strategy strat = BoundedAngleAdversary::Strategy::edge_worst;
      if (adversary == "random") strat = BoundedAngleAdversary::Strategy::random_honest;
      BoundedAngleAdversary adv(z, beta, strat, seed);
      EpisodeOptions opts;
      if (budget > 0) opts.budget = budget;
      Episode ep(z, &adv, opts);
      BoundedHuntOptions hopt;
      hopt.mosaic.mode = index_mode == "exact" ? IndexMode::exact_formula : IndexMode::empirical;
      hopt.mosaic.tile_budget = tile_budget;
      BoundedHuntReport rep = treasure_hunt_bounded(ep, hopt);
      std::cout << (rep.found ? "found" : "not found") << " cost=" << fmt9(rep.cost)
                << " phases=" << rep.phases << "\n";
      if (!out_path.empty()) {
        EpisodeRecord rec = export_episode(ep, "hunt2", rep.phases);
        for (const MosaicReport& m : rep.mosaic_reports) rec.mosaic_reports.push_back(to_record(m));
        save_episode(rec, out_path);
      }
      return rep.found ? 0 : kExitModuleError;
    }
    if (app.got_subcommand(baseline)) {
      if (audit) {
        double d_radius = distance > 0 ? distance : 10.0;
        ForbiddenAngleAdversary adv(d_radius, seed);
        EpisodeOptions opts;
        opts.budget = walk_budget > 0 ? walk_budget : d_radius * d_radius / 2.0;
        Episode ep(std::nullopt, &adv, opts);
        std::vector<Point> arc = spiral_waypoints(2 * d_radius);
        while (!ep.halted()) {
          ep.get_hint();
          std::size_t next_i = ep.trajectory().waypoints.size();
          if (next_i >= arc.size()) break;
          ep.move_to(arc[next_i]);
        }
        AreaReport ar =
            forbidden_area_audit(d_radius, adv.transcript(), ep.trajectory().waypoints, samples,
                                 seed + 1);
        std::cout << "forbidden_disc_area=" << fmt9(ar.forbidden_disc_area)
                  << " residual_area=" << fmt9(ar.residual_area) << " witness="
                  << (ar.witness ? fmt9(ar.witness->x) + "," + fmt9(ar.witness->y)
                                 : std::string("none"))
                  << "\n";
        if (!out_path.empty()) {
          EpisodeRecord rec = export_episode(ep, "forbidden_audit", 0);
          rec.area_report = to_record(ar);
          save_episode(rec, out_path);
        }
        return 0;
      }
      Point z = resolve_treasure(treasure_flag, distance, seed);
      EpisodeOptions opts;
      if (budget > 0) opts.budget = budget;
      Episode ep(z, nullptr, opts);
      SpiralReport rep = spiral_search(ep);
      std::cout << (rep.found ? "found" : "not found") << " cost=" << fmt9(rep.cost)
                << " rings=" << rep.rings << "\n";
      if (!out_path.empty()) save_episode(export_episode(ep, "spiral", rep.rings), out_path);
      return rep.found ? 0 : kExitModuleError;
    }
    if (app.got_subcommand(sweep)) {
      IndexMode mode = index_mode == "exact" ? IndexMode::exact_formula : IndexMode::empirical;
      return run_sweep(algo, beta, dmin, dmax, seeds, adversary, mode, jobs, out_path);
    }
    if (app.got_subcommand(verify)) {
      bool ok = report_checks(verify_all(), std::cout);
      return ok ? 0 : kExitVerifyFailed;
    }
    if (app.got_subcommand(render)) {
      save_episode_svg(load_episode(in_path), out_path);
      std::cout << "wrote " << out_path << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << error_code_name(e.code) << ": " << e.what() << "\n";
    if (e.code == ErrorCode::tile_budget_exceeded) return kExitTileBudget;
    if (e.code == ErrorCode::io_error) return kExitIo;
    return kExitModuleError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModuleError;
  }
  return 0;
}
