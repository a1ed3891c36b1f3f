// Copyright 2026 The walkeropt Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// walkeropt: ground tracks, sensor footprints, grid coverage and Walker
// constellation search from a JSON scenario file.
//
// Exit codes: 0 success, 1 no feasible constellation found, 2 bad usage or
// configuration, 3 runtime or I/O failure.

#include <CLI11.hpp>
#include <fmt/core.h>

#include <cstdio>
#include <optional>
#include <string>

#include "walkeropt/angles.hpp"
#include "walkeropt/constellation.hpp"
#include "walkeropt/error.hpp"
#include "walkeropt/export.hpp"
#include "walkeropt/hexgrid.hpp"
#include "walkeropt/optimizer.hpp"
#include "walkeropt/orbit.hpp"
#include "walkeropt/scenario.hpp"
#include "walkeropt/sensor.hpp"
#include "walkeropt/version.hpp"

namespace {

using namespace walkeropt;

enum ExitCode { kOk = 0, kInfeasible = 1, kConfigError = 2, kRuntimeError = 3 };

struct Options {
  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> cell_radius_deg;
  std::optional<int> epochs;
  std::optional<int> periods;
  std::optional<std::string> out_dir;
  int threads = 1;
  int verbose = 0;
  std::string satellite = "0-1";
  double time_s = 0.0;
};

void add_common(CLI::App* cmd, Options& o, bool needs_scenario) {
  if (needs_scenario) {
    cmd->add_option("scenario", o.scenario_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  }
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--cell-radius-deg", o.cell_radius_deg, "Hexagon circumradius in degrees")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--epochs", o.epochs, "Number of sampled epochs")->check(CLI::PositiveNumber);
  cmd->add_option("--periods", o.periods, "Horizon in orbital periods")->check(CLI::PositiveNumber);
  cmd->add_option("--out-dir", o.out_dir, "Output directory");
  cmd->add_option("--threads", o.threads, "Worker threads for coverage evaluation")->check(CLI::PositiveNumber);
  cmd->add_flag("-v,--verbose", o.verbose, "Log progress to stderr (repeat for more)");
}

ScenarioConfig resolve(const Options& o, ScenarioConfig c) {
  if (o.seed) c.annealing.rng_seed = *o.seed;
  if (o.cell_radius_deg) c.cell_radius_deg = *o.cell_radius_deg;
  if (o.epochs) c.annealing.n_epochs = *o.epochs;
  if (o.periods) c.annealing.n_periods = *o.periods;
  if (o.out_dir) c.output_dir = *o.out_dir;
  c.annealing.validate();
  return c;
}

ScenarioConfig load(const Options& o) { return resolve(o, load_scenario(o.scenario_path)); }

double horizon_s(const ScenarioConfig& c) {
  if (!c.initial.shells.empty()) return c.annealing.n_periods * reference_period(c.initial, c.earth);
  OrbitalElements el;
  el.a_km = c.orbit.a_km;
  el.e = c.orbit.e;
  return c.annealing.n_periods * nodal_period(el, c.earth);
}

Scenario build_scenario(const ScenarioConfig& c, int threads) {
  return make_scenario(c.earth, c.sensor, tessellate(c.region, c.cell_radius_deg), horizon_s(c), c.annealing, threads);
}

GroundTrack track_for(const OrbitalElements& el, const ScenarioConfig& c) {
  const double horizon = c.annealing.n_periods * nodal_period(el, c.earth);
  return ground_track(el, c.earth, 0.0, horizon, c.annealing.n_periods * c.track_samples_per_period + 1);
}

void report_written(const std::vector<std::filesystem::path>& files, int verbose) {
  if (verbose < 1) return;
  for (const auto& f : files) fmt::print(stderr, "wrote {}\n", f.string());
}

SatelliteId parse_satellite(const std::string& text) {
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) throw std::invalid_argument("missing '-'");
    return SatelliteId{std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
  } catch (const std::exception&) {
    throw ValidationError("--satellite", "expected <shell>-<number>, got '" + text + "'");
  }
}

int run_propagate(const Options& o) {
  const ScenarioConfig c = load(o);
  const SatelliteId want = parse_satellite(o.satellite);
  for (const SatelliteElements& s : all_elements(c.initial)) {
    if (s.id != want) continue;
    const GroundTrack track = track_for(s.elements, c);
    OutputBundle out;
    out.ground_track = &track;
    report_written(write_outputs(out, c.output_dir), o.verbose);
    return kOk;
  }
  throw ValidationError("--satellite", "no satellite " + o.satellite + " in the constellation");
}

int run_footprint(const Options& o) {
  const ScenarioConfig c = load(o);
  const Scenario sc = build_scenario(c, o.threads);
  const std::vector<SatelliteElements> sats = all_elements(c.initial);
  const std::vector<FootprintPolygon> fps = constellation_footprints(sats, sc, o.time_s);
  const std::vector<bool> covered = covered_cells(sc.grid, fps);
  OutputBundle out;
  out.footprints = &fps;
  out.grid = &sc.grid;
  out.covered = &covered;
  report_written(write_outputs(out, c.output_dir), o.verbose);
  return kOk;
}

int run_coverage(const Options& o) {
  const ScenarioConfig c = load(o);
  const Scenario sc = build_scenario(c, o.threads);
  const CoverageReport report = coverage_report(c.initial, sc);
  fmt::print(stderr, "{} satellites, {} cells, average coverage {:.4f}\n", c.initial.total_sats(), sc.grid.size(),
             report.average);
  OutputBundle out;
  out.coverage = &report;
  report_written(write_outputs(out, c.output_dir), o.verbose);
  return kOk;
}

int run_optimize(const Options& o, const ScenarioConfig& c) {
  const Scenario sc = build_scenario(c, o.threads);
  fmt::print(stderr, "grid {} cells, {} epochs, {} iterations, seed {}\n", sc.grid.size(), sc.epochs.size(),
             cooling_iterations(c.annealing.t0, c.annealing.t_min, c.annealing.alpha), c.annealing.rng_seed);

  ProgressFn progress;
  if (o.verbose > 0) {
    progress = [](const AnnealingState& s) {
      const HistoryEntry& h = s.history.back();
      fmt::print(stderr, "iter {:4d}  T {:.5f}  N {:4d}  coverage {:.4f}{}\n", h.iter, h.temperature, h.total_sats,
                 h.avg_coverage, h.accepted_best ? "  best" : "");
    };
  }
  const OptimizationResult r = optimize(c.initial, c.annealing, sc, progress);

  OutputBundle out;
  out.history = &r.history;
  if (r.status == OptimizationStatus::NoFeasibleSolution) {
    report_written(write_outputs(out, c.output_dir), o.verbose);
    fmt::print(stderr, "no feasible constellation reached coverage {:.4f}\n", c.annealing.coverage_target);
    return kInfeasible;
  }

  const CoverageReport report = coverage_report(r.best, sc);
  const std::vector<SatelliteElements> sats = all_elements(r.best);
  const GroundTrack track = track_for(sats.front().elements, c);
  const std::vector<FootprintPolygon> fps = constellation_footprints(sats, sc, 0.0);
  const std::vector<bool> covered = covered_cells(sc.grid, fps);
  out.coverage = &report;
  out.constellation = &r.best;
  out.ground_track = &track;
  out.footprints = &fps;
  out.grid = &sc.grid;
  out.covered = &covered;
  report_written(write_outputs(out, c.output_dir), o.verbose);

  for (const WalkerShell& s : r.best.shells) {
    fmt::print(stderr, "best: Walker {}/{}/{} at i = {:.3f} deg, coverage {:.4f}, iteration {}\n", s.n_sats,
               s.n_planes, s.phase, rad_to_deg(s.inclination), r.best_coverage, r.best_iteration);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walker constellation coverage analysis and search"};
  app.set_version_flag("--version", std::string("walkeropt ") + WALKEROPT_VERSION);
  app.require_subcommand(1);

  Options o;
  auto* propagate = app.add_subcommand("propagate", "Write the ground track of one satellite");
  add_common(propagate, o, true);
  propagate->add_option("--satellite", o.satellite, "Satellite id as <shell>-<number>");

  auto* footprint_cmd = app.add_subcommand("footprint", "Write sensor footprints and grid coverage at one instant");
  add_common(footprint_cmd, o, true);
  footprint_cmd->add_option("--time", o.time_s, "Seconds after the scenario epoch");

  auto* coverage = app.add_subcommand("coverage", "Write the coverage series of the configured constellation");
  add_common(coverage, o, true);

  auto* optimize_cmd = app.add_subcommand("optimize", "Search for the smallest constellation meeting the target");
  add_common(optimize_cmd, o, true);

  auto* reproduce = app.add_subcommand("reproduce", "Run the bundled reference scenario end to end");
  add_common(reproduce, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  try {
    if (*propagate) return run_propagate(o);
    if (*footprint_cmd) return run_footprint(o);
    if (*coverage) return run_coverage(o);
    if (*optimize_cmd) return run_optimize(o, load(o));
    if (*reproduce) return run_optimize(o, resolve(o, reference_scenario()));
  } catch (const ParseError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kConfigError;
  } catch (const ValidationError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kConfigError;
  } catch (const DegenerateRegion& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kConfigError;
  } catch (const DomainError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kRuntimeError;
  }
  return kConfigError;
}
