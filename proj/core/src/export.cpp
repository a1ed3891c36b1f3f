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

#include "walkeropt/export.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "walkeropt/angles.hpp"
#include "walkeropt/error.hpp"
#include "walkeropt/planar.hpp"

namespace walkeropt {

namespace {

// Fixed-point text without a sign on values that round to zero.
std::string fixed(double v, int digits) {
  std::string s = fmt::format("{:.{}f}", v, digits);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string sat_label(const SatelliteId& id) { return fmt::format("{}-{}", id.shell, id.number); }

void write_ring(std::ostream& out, std::span<const planar::LonLat> ring) {
  out << '[';
  for (std::size_t i = 0; i <= ring.size(); ++i) {
    const planar::LonLat& p = ring[i % ring.size()];
    if (i) out << ',';
    out << '[' << fixed(p.lon, 7) << ',' << fixed(p.lat, 7) << ']';
  }
  out << ']';
}

}  // namespace

void write_ground_track_csv(std::ostream& out, const GroundTrack& track) {
  out << "t_s,lon_deg,lat_deg\n";
  for (const TrackSample& s : track.samples) {
    out << fixed(s.t, 6) << ',' << fixed(rad_to_deg(wrap_pi(s.lon)), 9) << ',' << fixed(rad_to_deg(s.lat), 9)
        << '\n';
  }
}

void write_coverage_csv(std::ostream& out, const CoverageReport& report) {
  out << "t_s,covered,total,ratio\n";
  for (const CoverageSample& s : report.instantaneous) {
    out << fixed(s.t, 6) << ',' << s.covered << ',' << s.total << ',' << fixed(s.ratio, 9) << '\n';
  }
}

void write_history_csv(std::ostream& out, std::span<const HistoryEntry> history) {
  out << "iter,temperature,total_sats,avg_coverage,feasible,accepted_best\n";
  for (const HistoryEntry& h : history) {
    out << h.iter << ',' << fixed(h.temperature, 12) << ',' << h.total_sats << ',' << fixed(h.avg_coverage, 9)
        << ',' << (h.feasible ? 1 : 0) << ',' << (h.accepted_best ? 1 : 0) << '\n';
  }
}

void write_constellation_csv(std::ostream& out, const ConstellationConfig& config) {
  out << "shell,sat_id,a_km,e,i_deg,raan_deg,argp_deg,M_deg\n";
  for (const SatelliteElements& s : all_elements(config)) {
    const OrbitalElements& el = s.elements;
    out << s.id.shell << ',' << s.id.number << ',' << fixed(el.a_km, 6) << ',' << fixed(el.e, 9) << ','
        << fixed(rad_to_deg(el.inclination), 9) << ',' << fixed(rad_to_deg(el.raan), 9) << ','
        << fixed(rad_to_deg(el.argp), 9) << ',' << fixed(rad_to_deg(el.mean_anomaly), 9) << '\n';
  }
}

void write_footprints_geojson(std::ostream& out, std::span<const FootprintPolygon> footprints) {
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  bool first = true;
  for (const FootprintPolygon& fp : footprints) {
    const std::vector<planar::Ring> rings = planar::footprint_rings(fp);
    if (rings.empty()) continue;
    out << (first ? "\n" : ",\n");
    first = false;
    out << "{\"type\":\"Feature\",\"properties\":{\"sat_id\":\"" << sat_label(fp.satellite)
        << "\",\"t_s\":" << fixed(fp.epoch, 6) << "},\"geometry\":";
    if (rings.size() == 1) {
      out << "{\"type\":\"Polygon\",\"coordinates\":[";
      write_ring(out, rings.front());
      out << "]}}";
    } else {
      out << "{\"type\":\"MultiPolygon\",\"coordinates\":[";
      for (std::size_t i = 0; i < rings.size(); ++i) {
        if (i) out << ',';
        out << '[';
        write_ring(out, rings[i]);
        out << ']';
      }
      out << "]}}";
    }
  }
  out << "\n]}\n";
}

void write_grid_geojson(std::ostream& out, const HexGrid& grid, const std::vector<bool>& covered) {
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const HexCell& c = grid.cells()[i];
    out << (i ? ",\n" : "\n");
    out << "{\"type\":\"Feature\",\"properties\":{\"id\":" << c.id << ",\"row\":" << c.row << ",\"col\":" << c.col;
    if (!covered.empty()) out << ",\"covered\":" << (covered[i] ? "true" : "false");
    out << "},\"geometry\":{\"type\":\"Polygon\",\"coordinates\":[";
    write_ring(out, c.vertices);
    out << "]}}";
  }
  out << "\n]}\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing " + path.string());
}

std::vector<std::filesystem::path> write_outputs(const OutputBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* name, auto&& writer) {
    std::ostringstream buf;
    writer(buf);
    const std::filesystem::path path = dir / name;
    write_text_file(path, buf.str());
    written.push_back(path);
  };

  if (bundle.history) emit("history.csv", [&](std::ostream& o) { write_history_csv(o, *bundle.history); });
  if (bundle.coverage) emit("coverage_series.csv", [&](std::ostream& o) { write_coverage_csv(o, *bundle.coverage); });
  if (bundle.constellation) {
    emit("best_constellation.csv", [&](std::ostream& o) { write_constellation_csv(o, *bundle.constellation); });
  }
  if (bundle.ground_track) {
    emit("ground_tracks.csv", [&](std::ostream& o) { write_ground_track_csv(o, *bundle.ground_track); });
  }
  if (bundle.footprints) {
    emit("footprints.geojson", [&](std::ostream& o) { write_footprints_geojson(o, *bundle.footprints); });
  }
  if (bundle.grid) {
    emit("grid.geojson", [&](std::ostream& o) {
      write_grid_geojson(o, *bundle.grid, bundle.covered ? *bundle.covered : std::vector<bool>{});
    });
  }
  return written;
}

}  // namespace walkeropt
