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
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "walkeropt/constellation.hpp"
#include "walkeropt/hexgrid.hpp"
#include "walkeropt/optimizer.hpp"
#include "walkeropt/orbit.hpp"
#include "walkeropt/sensor.hpp"

// Writers for the tabular and polygon outputs. CSV files use ',' separators,
// '.' decimals and LF line endings; angles are written in degrees. Output is
// a pure function of the input, so identical inputs give identical bytes.
namespace walkeropt {

// t_s,lon_deg,lat_deg
void write_ground_track_csv(std::ostream& out, const GroundTrack& track);

// t_s,covered,total,ratio
void write_coverage_csv(std::ostream& out, const CoverageReport& report);

// iter,temperature,total_sats,avg_coverage,feasible,accepted_best
void write_history_csv(std::ostream& out, std::span<const HistoryEntry> history);

// shell,sat_id,a_km,e,i_deg,raan_deg,argp_deg,M_deg
void write_constellation_csv(std::ostream& out, const ConstellationConfig& config);

// FeatureCollection with one feature per footprint (properties sat_id, t_s).
// Footprints split at the antimeridian become MultiPolygons.
void write_footprints_geojson(std::ostream& out, std::span<const FootprintPolygon> footprints);

// One Polygon feature per cell with properties id, row, col and, when
// `covered` is non-empty, a covered flag.
void write_grid_geojson(std::ostream& out, const HexGrid& grid, const std::vector<bool>& covered = {});

// Files produced by a run; null members are skipped.
struct OutputBundle {
  const std::vector<HistoryEntry>* history = nullptr;        // history.csv
  const CoverageReport* coverage = nullptr;                   // coverage_series.csv
  const ConstellationConfig* constellation = nullptr;         // best_constellation.csv
  const GroundTrack* ground_track = nullptr;                  // ground_tracks.csv
  const std::vector<FootprintPolygon>* footprints = nullptr;  // footprints.geojson
  const HexGrid* grid = nullptr;                              // grid.geojson
  const std::vector<bool>* covered = nullptr;                 // optional per-cell flags for grid.geojson
};

// Creates `dir` if needed and writes every bundled output. Throws IoError
// naming the file on failure. Returns the paths written.
std::vector<std::filesystem::path> write_outputs(const OutputBundle& bundle, const std::filesystem::path& dir);

// Writes `content` to `path`, throwing IoError naming the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace walkeropt
