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

#include "walkeropt/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "walkeropt/angles.hpp"
#include "walkeropt/error.hpp"

namespace walkeropt {

namespace {

constexpr double kMinInclination = 1e-6;
constexpr double kMaxInclination = 0.5 * kPi;
constexpr int kMaxCoolingIterations = 10'000'000;

double change_probability(double t) {
  if (!(t > 0.0)) throw DomainError("annealing temperature must be positive");
  return std::min(0.5 * t, 1.0);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

bool Rng::bernoulli(double p) { return uniform() < p; }

void AnnealingParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(what);
  };
  require(t_min > 0.0 && t_min < t0 && std::isfinite(t0), "annealing: need 0 < t_min < t0");
  require(alpha > 0.0 && alpha < 1.0, "annealing: alpha must be in (0, 1)");
  require(coverage_target >= 0.0 && coverage_target <= 1.0, "annealing: coverage target must be in [0, 1]");
  require(n_periods >= 1, "annealing: n_periods must be at least 1");
  require(n_epochs >= 1, "annealing: n_epochs must be at least 1");
  require(incl_step0 >= 0.0 && std::isfinite(incl_step0), "annealing: inclination step must be non-negative");
  require(incl_candidates >= 1, "annealing: at least one inclination candidate is required");
  require(acceptance_scale >= 0.0 && std::isfinite(acceptance_scale),
          "annealing: acceptance scale must be non-negative");
  require(max_total_sats >= 1, "annealing: max_total_sats must be at least 1");
}

std::vector<double> sample_epochs(double horizon, int n, Rng& rng) {
  if (!(horizon > 0.0) || n < 1) throw DomainError("sample_epochs: need a positive horizon and n >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (double& t : out) t = rng.uniform(0.0, horizon);
  std::sort(out.begin(), out.end());
  return out;
}

double reference_period(const ConstellationConfig& config, const EarthModel& earth) {
  if (config.shells.empty()) throw DomainError("reference_period: constellation has no shells");
  const WalkerShell& s = config.shells.front();
  OrbitalElements el;
  el.a_km = s.a_km;
  el.e = s.e;
  el.inclination = s.inclination;
  return nodal_period(el, earth);
}

Scenario make_scenario(const EarthModel& earth, const SensorModel& sensor, HexGrid grid,
                       const ConstellationConfig& initial, const AnnealingParams& params, int threads) {
  return make_scenario(earth, sensor, std::move(grid), params.n_periods * reference_period(initial, earth), params,
                       threads);
}

Scenario make_scenario(const EarthModel& earth, const SensorModel& sensor, HexGrid grid, double horizon,
                       const AnnealingParams& params, int threads) {
  Rng rng(params.rng_seed, 0);
  return Scenario{earth, sensor, std::move(grid), sample_epochs(horizon, params.n_epochs, rng), threads};
}

std::vector<FootprintPolygon> constellation_footprints(std::span<const SatelliteElements> sats,
                                                       const Scenario& scenario, double t) {
  std::vector<FootprintPolygon> out;
  out.reserve(sats.size());
  for (const SatelliteElements& s : sats) {
    out.push_back(footprint(s.elements, scenario.earth, scenario.sensor, t, s.id));
  }
  return out;
}

CoverageReport coverage_report(const ConstellationConfig& config, const Scenario& scenario) {
  const std::vector<SatelliteElements> sats = all_elements(config);
  return average_coverage(
      scenario.grid, [&](double t) { return constellation_footprints(sats, scenario, t); }, scenario.epochs,
      scenario.threads);
}

double evaluate(const ConstellationConfig& config, const Scenario& scenario) {
  if (config.total_sats() == 0) return 0.0;
  return coverage_report(config, scenario).average;
}

double acceptance_probability(int n, double t, double scale) {
  if (n < 1) throw DomainError("acceptance_probability: iteration count must be at least 1");
  if (!(t > 0.0)) throw DomainError("acceptance_probability: temperature must be positive");
  return std::clamp(std::exp(-scale / (static_cast<double>(n) * t)), 0.0, 1.0);
}

EvaluatedConfig perturb_inclination(const ConstellationConfig& config, double t, const AnnealingParams& params,
                                    const Scenario& scenario, Rng& rng) {
  if (!(t > 0.0)) throw DomainError("perturb_inclination: temperature must be positive");
  EvaluatedConfig best{config, 0.0};
  if (config.shells.empty()) return best;

  const double half_range = params.incl_step0 * (t / params.t0);
  for (std::size_t k = 0; k < config.shells.size(); ++k) {
    const double centre = best.config.shells[k].inclination;
    std::optional<EvaluatedConfig> pick;
    for (int c = 0; c < params.incl_candidates; ++c) {
      ConstellationConfig candidate = best.config;
      candidate.shells[k].inclination =
          std::clamp(rng.uniform(centre - half_range, centre + half_range), kMinInclination, kMaxInclination);
      const double cov = evaluate(candidate, scenario);
      if (!pick || cov > pick->coverage) pick = EvaluatedConfig{std::move(candidate), cov};
    }
    best = std::move(*pick);
  }
  return best;
}

ConstellationConfig shrink(const ConstellationConfig& config, double t, Rng& rng) {
  const double p = change_probability(t);
  if (config.total_sats() <= 1) return config;

  ConstellationConfig out;
  for (const WalkerShell& shell : config.shells) {
    WalkerShell s = shell;
    if (rng.bernoulli(p)) {
      int planes = s.n_planes;
      int per_plane = s.sats_per_plane();
      if (rng.bernoulli(0.5)) {
        --planes;
      } else {
        --per_plane;
      }
      if (planes == 0 || per_plane == 0) continue;
      s.n_planes = planes;
      s.n_sats = planes * per_plane;
      s.phase = std::min(s.phase, planes - 1);
    }
    out.shells.push_back(s);
  }
  if (out.total_sats() == 0) return config;
  return out;
}

ConstellationConfig grow(const ConstellationConfig& config, double t, Rng& rng, int max_total_sats) {
  const double p = change_probability(t);
  ConstellationConfig out = config;
  int total = config.total_sats();
  for (WalkerShell& s : out.shells) {
    if (!rng.bernoulli(p)) continue;
    int planes = s.n_planes;
    int per_plane = s.sats_per_plane();
    if (rng.bernoulli(0.5)) {
      ++planes;
    } else {
      ++per_plane;
    }
    const int added = planes * per_plane - s.n_sats;
    if (total + added > max_total_sats) continue;
    total += added;
    s.n_planes = planes;
    s.n_sats = planes * per_plane;
  }
  return out;
}

int cooling_iterations(double t0, double t_min, double alpha) {
  if (!(t_min > 0.0 && t_min < t0 && alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("cooling_iterations: need 0 < t_min < t0 and 0 < alpha < 1");
  }
  for (int k = 0; k < kMaxCoolingIterations; ++k) {
    if (t0 * std::pow(alpha, k) <= t_min) return k + 1;
  }
  throw DomainError("cooling_iterations: schedule too long");
}

OptimizationResult optimize(const ConstellationConfig& initial, const AnnealingParams& params,
                            const Scenario& scenario, const ProgressFn& progress) {
  params.validate();
  if (initial.total_sats() < 1) throw DomainError("optimize: initial constellation is empty");
  for (const WalkerShell& s : initial.shells) s.validate(scenario.earth);

  Rng rng(params.rng_seed, 1);
  const int iterations = cooling_iterations(params.t0, params.t_min, params.alpha);

  OptimizationResult result;
  AnnealingState state;
  state.current = initial;
  std::optional<double> known_coverage;

  for (int k = 0; k < iterations; ++k) {
    const int n = k + 1;
    const double temperature = params.t0 * std::pow(params.alpha, k);
    state.iteration = n;
    state.temperature = temperature;

    const double coverage = known_coverage ? *known_coverage : evaluate(state.current, scenario);
    const bool feasible = coverage >= params.coverage_target;
    bool accepted = false;
    if (feasible) {
      result.feasible.push_back({n, state.current, coverage});
      const int count = state.current.total_sats();
      if (!state.best || count < state.best->total_sats()) {
        accepted = true;
      } else if (count == state.best->total_sats()) {
        // Equal-size alternatives replace the incumbent with the annealing
        // probability; larger ones never do.
        accepted = rng.uniform() < acceptance_probability(n, temperature, params.acceptance_scale);
      }
      if (accepted) {
        state.best = state.current;
        state.best_coverage = coverage;
        result.best_iteration = n;
      }
    }
    state.history.push_back({n, temperature, state.current.total_sats(), coverage, feasible, accepted,
                             state.best ? state.best->total_sats() : 0});
    if (progress) progress(state);
    if (n == iterations) break;

    const ConstellationConfig& base = feasible ? *state.best : state.current;
    EvaluatedConfig perturbed = perturb_inclination(base, temperature, params, scenario, rng);
    ConstellationConfig next = feasible ? shrink(perturbed.config, temperature, rng)
                                        : grow(perturbed.config, temperature, rng, params.max_total_sats);
    known_coverage.reset();
    if (next == perturbed.config) known_coverage = perturbed.coverage;
    state.current = std::move(next);
  }

  result.iterations = iterations;
  result.history = std::move(state.history);
  if (state.best) {
    result.status = OptimizationStatus::Feasible;
    result.best = std::move(*state.best);
    result.best_coverage = state.best_coverage;
  }
  return result;
}

}  // namespace walkeropt
