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

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "walkeropt/planar.hpp"
#include "walkeropt/sensor.hpp"

namespace walkeropt {

// Area of interest as a simple lon/lat polygon in degrees.
struct TargetRegion {
  planar::Ring boundary;

  // Throws DegenerateRegion for < 3 vertices, out-of-range coordinates,
  // self-intersection or near-zero area.
  void validate() const;

  bool operator==(const TargetRegion&) const = default;
};

// Pointy-top hexagon in the lon/lat plane. row/col are offset coordinates
// relative to the cell centred on the region's bounding box; odd rows are
// shifted east by half a cell width.
struct HexCell {
  int id = 0;
  int row = 0;
  int col = 0;
  planar::LonLat center;
  std::array<planar::LonLat, 6> vertices;
  planar::BBox bbox;
};

class HexGrid {
 public:
  HexGrid(TargetRegion region, double cell_radius, std::vector<HexCell> cells);

  const TargetRegion& region() const { return region_; }
  double cell_radius() const { return cell_radius_; }
  const std::vector<HexCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  // Calls fn(index) for every cell whose bounding box overlaps `box`, in
  // ascending index order.
  void for_each_candidate(const planar::BBox& box, const std::function<void(std::size_t)>& fn) const;

 private:
  struct RowSpan {
    double min_lat;
    double max_lat;
    std::size_t begin;
    std::size_t end;
  };

  TargetRegion region_;
  double cell_radius_;
  std::vector<HexCell> cells_;
  std::vector<RowSpan> rows_;
};

// Hexagonal lattice over the region's bounding box keeping every cell that
// intersects the region. Cells are numbered row-major (south to north, west
// to east). Throws DegenerateRegion or DomainError (cell_radius <= 0).
HexGrid tessellate(const TargetRegion& region, double cell_radius_deg);

bool cell_intersects(const HexCell& cell, std::span<const planar::LonLat> ring);
bool cell_intersects(const HexCell& cell, const FootprintPolygon& footprint);

struct InstantCoverage {
  int covered = 0;
  double ratio = 0.0;
};

// Cells touching the union of the footprints, each cell counted once.
InstantCoverage instantaneous_coverage(const HexGrid& grid, std::span<const FootprintPolygon> footprints);

// Per-cell covered flags for the same union.
std::vector<bool> covered_cells(const HexGrid& grid, std::span<const FootprintPolygon> footprints);

struct CoverageSample {
  double t = 0.0;
  int covered = 0;
  int total = 0;
  double ratio = 0.0;

  bool operator==(const CoverageSample&) const = default;
};

struct CoverageReport {
  std::vector<CoverageSample> instantaneous;
  double average = 0.0;

  bool operator==(const CoverageReport&) const = default;
};

using FootprintSource = std::function<std::vector<FootprintPolygon>(double epoch)>;

// Instantaneous coverage at every epoch and their arithmetic mean. Epochs are
// split across up to `threads` workers; the result does not depend on the
// thread count. `footprints_at` must be safe to call concurrently.
CoverageReport average_coverage(const HexGrid& grid, const FootprintSource& footprints_at,
                                std::span<const double> epochs, int threads = 1);

}  // namespace walkeropt
