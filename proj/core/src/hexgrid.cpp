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

#include "walkeropt/hexgrid.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "walkeropt/error.hpp"

namespace walkeropt {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

HexCell make_cell(double cx, double cy, double radius, int row, int col) {
  HexCell cell;
  cell.row = row;
  cell.col = col;
  cell.center = {cx, cy};
  // Pointy-top: vertices at 30 + 60k degrees, starting east of north.
  static constexpr std::array<std::pair<double, double>, 6> kUnit = {{
      {0.5 * kSqrt3, 0.5},
      {0.0, 1.0},
      {-0.5 * kSqrt3, 0.5},
      {-0.5 * kSqrt3, -0.5},
      {0.0, -1.0},
      {0.5 * kSqrt3, -0.5},
  }};
  for (std::size_t k = 0; k < 6; ++k) {
    cell.vertices[k] = {cx + radius * kUnit[k].first, cy + radius * kUnit[k].second};
  }
  cell.bbox = planar::bounding_box(cell.vertices);
  return cell;
}

void mark_covered(const HexGrid& grid, std::span<const FootprintPolygon> footprints, std::vector<bool>& covered) {
  const auto& cells = grid.cells();
  for (const FootprintPolygon& fp : footprints) {
    for (const planar::Ring& ring : planar::footprint_rings(fp)) {
      const planar::BBox box = planar::bounding_box(ring);
      grid.for_each_candidate(box, [&](std::size_t idx) {
        if (!covered[idx] && planar::rings_intersect(cells[idx].vertices, ring)) covered[idx] = true;
      });
    }
  }
}

}  // namespace

void TargetRegion::validate() const {
  if (boundary.size() < 3) throw DegenerateRegion("region: at least 3 boundary vertices are required");
  for (const planar::LonLat& p : boundary) {
    if (!(p.lon >= -180.0 && p.lon <= 180.0) || !(p.lat >= -90.0 && p.lat <= 90.0)) {
      throw DegenerateRegion("region: vertex outside the valid lon/lat range");
    }
  }
  if (!planar::is_simple(boundary)) throw DegenerateRegion("region: boundary self-intersects");
  const planar::BBox b = planar::bounding_box(boundary);
  const double box_area = (b.max_lon - b.min_lon) * (b.max_lat - b.min_lat);
  if (!(std::abs(planar::signed_area(boundary)) > 1e-9 * std::max(box_area, 1e-6))) {
    throw DegenerateRegion("region: boundary encloses no area");
  }
}

HexGrid::HexGrid(TargetRegion region, double cell_radius, std::vector<HexCell> cells)
    : region_(std::move(region)), cell_radius_(cell_radius), cells_(std::move(cells)) {
  for (std::size_t i = 0; i < cells_.size();) {
    std::size_t j = i;
    RowSpan span{cells_[i].bbox.min_lat, cells_[i].bbox.max_lat, i, i};
    while (j < cells_.size() && cells_[j].row == cells_[i].row) ++j;
    span.end = j;
    rows_.push_back(span);
    i = j;
  }
}

void HexGrid::for_each_candidate(const planar::BBox& box, const std::function<void(std::size_t)>& fn) const {
  for (const RowSpan& row : rows_) {
    if (row.max_lat < box.min_lat || row.min_lat > box.max_lat) continue;
    for (std::size_t i = row.begin; i < row.end; ++i) {
      if (cells_[i].bbox.overlaps(box)) fn(i);
    }
  }
}

HexGrid tessellate(const TargetRegion& region, double cell_radius_deg) {
  if (!(cell_radius_deg > 0.0 && std::isfinite(cell_radius_deg))) {
    throw DomainError("tessellate: cell radius must be positive");
  }
  region.validate();

  const planar::BBox box = planar::bounding_box(region.boundary);
  const double cx = 0.5 * (box.min_lon + box.max_lon);
  const double cy = 0.5 * (box.min_lat + box.max_lat);
  const double width = kSqrt3 * cell_radius_deg;
  const double row_step = 1.5 * cell_radius_deg;
  const int half_rows = static_cast<int>(std::ceil((0.5 * (box.max_lat - box.min_lat) + cell_radius_deg) / row_step));
  const int half_cols = static_cast<int>(std::ceil((0.5 * (box.max_lon - box.min_lon) + width) / width));

  std::vector<HexCell> cells;
  for (int row = -half_rows; row <= half_rows; ++row) {
    const double shift = (row % 2 != 0) ? 0.5 * width : 0.0;
    for (int col = -half_cols; col <= half_cols; ++col) {
      HexCell cell = make_cell(cx + col * width + shift, cy + row * row_step, cell_radius_deg, row, col);
      if (!cell.bbox.overlaps(box)) continue;
      if (!planar::rings_intersect(cell.vertices, region.boundary)) continue;
      cell.id = static_cast<int>(cells.size());
      cells.push_back(cell);
    }
  }
  return HexGrid(region, cell_radius_deg, std::move(cells));
}

bool cell_intersects(const HexCell& cell, std::span<const planar::LonLat> ring) {
  return planar::rings_intersect(cell.vertices, ring);
}

bool cell_intersects(const HexCell& cell, const FootprintPolygon& footprint) {
  for (const planar::Ring& ring : planar::footprint_rings(footprint)) {
    if (planar::rings_intersect(cell.vertices, ring)) return true;
  }
  return false;
}

std::vector<bool> covered_cells(const HexGrid& grid, std::span<const FootprintPolygon> footprints) {
  std::vector<bool> covered(grid.size(), false);
  mark_covered(grid, footprints, covered);
  return covered;
}

InstantCoverage instantaneous_coverage(const HexGrid& grid, std::span<const FootprintPolygon> footprints) {
  InstantCoverage out;
  if (grid.size() == 0) return out;
  const std::vector<bool> covered = covered_cells(grid, footprints);
  out.covered = static_cast<int>(std::count(covered.begin(), covered.end(), true));
  out.ratio = static_cast<double>(out.covered) / static_cast<double>(grid.size());
  return out;
}

CoverageReport average_coverage(const HexGrid& grid, const FootprintSource& footprints_at,
                                std::span<const double> epochs, int threads) {
  if (epochs.empty()) throw DomainError("average_coverage: at least one epoch is required");

  CoverageReport report;
  report.instantaneous.resize(epochs.size());
  const int total = static_cast<int>(grid.size());

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < epochs.size(); k += stride) {
      const std::vector<FootprintPolygon> fps = footprints_at(epochs[k]);
      const InstantCoverage c = instantaneous_coverage(grid, fps);
      report.instantaneous[k] = {epochs[k], c.covered, total, c.ratio};
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(epochs.size(), static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            work(w, workers);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Summed in epoch order so the mean is independent of the thread count.
  double sum = 0.0;
  for (const CoverageSample& s : report.instantaneous) sum += s.ratio;
  report.average = sum / static_cast<double>(epochs.size());
  return report;
}

}  // namespace walkeropt
