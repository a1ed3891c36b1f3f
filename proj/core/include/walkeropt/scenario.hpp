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

#include <filesystem>
#include <string>
#include <string_view>

#include "walkeropt/angles.hpp"
#include "walkeropt/constellation.hpp"
#include "walkeropt/hexgrid.hpp"
#include "walkeropt/optimizer.hpp"
#include "walkeropt/sensor.hpp"

namespace walkeropt {

// Shell parameters applied when a shell entry omits them.
struct OrbitDefaults {
  double a_km = 8576.0;
  double e = 0.0;
  double argp = 0.0;  // rad

  bool operator==(const OrbitDefaults&) const = default;
};

// A complete experiment definition. Angles are radians here and degrees in
// the scenario file.
struct ScenarioConfig {
  EarthModel earth;
  OrbitDefaults orbit;
  SensorModel sensor = SensorModel::frame(deg_to_rad(30.0));
  TargetRegion region;
  double cell_radius_deg = 0.5;
  AnnealingParams annealing;
  ConstellationConfig initial;
  int track_samples_per_period = 50;
  std::string output_dir = "out";

  bool operator==(const ScenarioConfig&) const = default;
};

// Parses and validates a JSON scenario. Unknown keys are rejected. Throws
// ParseError for malformed text and ValidationError (with the key path) for
// missing or out-of-range values.
ScenarioConfig parse_scenario(std::string_view text);

ScenarioConfig load_scenario(const std::filesystem::path& path);

// Inverse of parse_scenario; every field is written explicitly.
std::string dump_scenario(const ScenarioConfig& config);

// The built-in reference experiment: 24 x 24 degree region over East Asia,
// 8576 km circular orbits, frame sensor with 60 degree field of view, initial
// i = 40 deg Walker 6/3/1, annealing T = 1, Tmin = 0.01, alpha = 0.98, target
// average coverage 70 % over 50 instants within 30 orbital periods.
ScenarioConfig reference_scenario();

}  // namespace walkeropt
