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

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "walkeropt/constellation.hpp"
#include "walkeropt/hexgrid.hpp"
#include "walkeropt/sensor.hpp"

namespace walkeropt {

// Seeded 64-bit Mersenne Twister with its own uniform mapping, so sequences
// do not depend on the standard library's distribution implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  // [0, 1)
  double uniform();
  double uniform(double lo, double hi);
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

struct AnnealingParams {
  double t0 = 1.0;
  double t_min = 0.01;
  double alpha = 0.98;
  double coverage_target = 0.70;
  int n_periods = 30;
  int n_epochs = 50;
  double incl_step0 = 0.08726646259971647;  // 5 degrees
  int incl_candidates = 3;
  double acceptance_scale = 100.0;
  std::uint64_t rng_seed = 42;
  int max_total_sats = 1000;

  // Throws DomainError naming the violated constraint.
  void validate() const;

  bool operator==(const AnnealingParams&) const = default;
};

// Everything evaluate() needs besides the constellation. The epoch list is
// fixed for a whole optimizer run so every configuration is scored on the
// same instants.
struct Scenario {
  EarthModel earth;
  SensorModel sensor;
  HexGrid grid;
  std::vector<double> epochs;
  int threads = 1;
};

// n uniform draws over [0, horizon), sorted ascending.
std::vector<double> sample_epochs(double horizon, int n, Rng& rng);

// Nodal period of the first shell; the time unit for params.n_periods.
double reference_period(const ConstellationConfig& config, const EarthModel& earth);

// Samples params.n_epochs epochs over params.n_periods reference periods of
// `initial`, using stream 0 of params.rng_seed.
Scenario make_scenario(const EarthModel& earth, const SensorModel& sensor, HexGrid grid,
                       const ConstellationConfig& initial, const AnnealingParams& params, int threads = 1);
// Same, with the epoch horizon given in seconds instead of derived from the first shell.
Scenario make_scenario(const EarthModel& earth, const SensorModel& sensor, HexGrid grid, double horizon,
                       const AnnealingParams& params, int threads = 1);

std::vector<FootprintPolygon> constellation_footprints(std::span<const SatelliteElements> sats,
                                                       const Scenario& scenario, double t);

CoverageReport coverage_report(const ConstellationConfig& config, const Scenario& scenario);

// Average coverage over the scenario epochs; 0 for an empty constellation.
double evaluate(const ConstellationConfig& config, const Scenario& scenario);

// exp(-scale / (n * t)); DomainError for n < 1 or t <= 0.
double acceptance_probability(int n, double t, double scale = 100.0);

struct EvaluatedConfig {
  ConstellationConfig config;
  double coverage = 0.0;
};

// Shell by shell, draws params.incl_candidates inclinations uniformly within
// +/- incl_step0 * t / t0 of the current one (clamped to (0, 90] degrees) and
// keeps the candidate with the highest average coverage.
EvaluatedConfig perturb_inclination(const ConstellationConfig& config, double t, const AnnealingParams& params,
                                    const Scenario& scenario, Rng& rng);

// With probability 0.5 * t per shell, remove one plane or one satellite per
// plane (fair coin). Emptied shells are dropped; a change that would leave
// no satellite at all is not applied.
ConstellationConfig shrink(const ConstellationConfig& config, double t, Rng& rng);

// Mirror of shrink that adds a plane or a satellite per plane, never taking
// the total above max_total_sats.
ConstellationConfig grow(const ConstellationConfig& config, double t, Rng& rng,
                         int max_total_sats = std::numeric_limits<int>::max());

// Iterations run by the cooling schedule: one at each T_k = t0 * alpha^k for
// k = 0..K, where K is the first index with T_K <= t_min.
int cooling_iterations(double t0, double t_min, double alpha);

struct HistoryEntry {
  int iter = 0;
  double temperature = 0.0;
  int total_sats = 0;
  double avg_coverage = 0.0;
  bool feasible = false;
  bool accepted_best = false;
  int best_total_sats = 0;  // 0 while no feasible solution is known

  bool operator==(const HistoryEntry&) const = default;
};

struct FeasibleSolution {
  int iter = 0;
  ConstellationConfig config;
  double coverage = 0.0;

  bool operator==(const FeasibleSolution&) const = default;
};

struct AnnealingState {
  double temperature = 0.0;
  int iteration = 0;
  ConstellationConfig current;
  std::optional<ConstellationConfig> best;
  double best_coverage = 0.0;
  std::vector<HistoryEntry> history;
};

enum class OptimizationStatus { Feasible, NoFeasibleSolution };

struct OptimizationResult {
  OptimizationStatus status = OptimizationStatus::NoFeasibleSolution;
  ConstellationConfig best;  // empty when no feasible solution was found
  double best_coverage = 0.0;
  int best_iteration = 0;
  int iterations = 0;
  std::vector<HistoryEntry> history;
  std::vector<FeasibleSolution> feasible;

  bool operator==(const OptimizationResult&) const = default;
};

using ProgressFn = std::function<void(const AnnealingState&)>;

// Modified simulated annealing: minimise the satellite count subject to
// average coverage >= params.coverage_target.
OptimizationResult optimize(const ConstellationConfig& initial, const AnnealingParams& params,
                            const Scenario& scenario, const ProgressFn& progress = {});

}  // namespace walkeropt
