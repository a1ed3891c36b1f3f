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

#include "walkeropt/planar.hpp"

#include <algorithm>
#include <cmath>

#include "walkeropt/angles.hpp"

namespace walkeropt::planar {

namespace {

double orient(const LonLat& a, const LonLat& b, const LonLat& c) {
  return (b.lon - a.lon) * (c.lat - a.lat) - (b.lat - a.lat) * (c.lon - a.lon);
}

// p is known to be collinear with [a, b].
bool within_segment_box(const LonLat& a, const LonLat& b, const LonLat& p) {
  return std::min(a.lon, b.lon) <= p.lon && p.lon <= std::max(a.lon, b.lon) &&
         std::min(a.lat, b.lat) <= p.lat && p.lat <= std::max(a.lat, b.lat);
}

// Drops a repeated closing vertex.
std::span<const LonLat> open_ring(std::span<const LonLat> ring) {
  if (ring.size() > 1 && ring.front() == ring.back()) return ring.first(ring.size() - 1);
  return ring;
}

void append_if_distinct(Ring& out, const LonLat& p) {
  if (out.empty() || !(out.back() == p)) out.push_back(p);
}

}  // namespace

BBox bounding_box(std::span<const LonLat> ring) {
  BBox b{ring.front().lon, ring.front().lat, ring.front().lon, ring.front().lat};
  for (const LonLat& p : ring) {
    b.min_lon = std::min(b.min_lon, p.lon);
    b.max_lon = std::max(b.max_lon, p.lon);
    b.min_lat = std::min(b.min_lat, p.lat);
    b.max_lat = std::max(b.max_lat, p.lat);
  }
  return b;
}

double signed_area(std::span<const LonLat> ring) {
  ring = open_ring(ring);
  double twice = 0.0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    const LonLat& p = ring[i];
    const LonLat& q = ring[(i + 1) % n];
    twice += p.lon * q.lat - q.lon * p.lat;
  }
  return 0.5 * twice;
}

bool segments_intersect(const LonLat& p1, const LonLat& p2, const LonLat& q1, const LonLat& q2) {
  const double d1 = orient(q1, q2, p1);
  const double d2 = orient(q1, q2, p2);
  const double d3 = orient(p1, p2, q1);
  const double d4 = orient(p1, p2, q2);

  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && within_segment_box(q1, q2, p1)) return true;
  if (d2 == 0 && within_segment_box(q1, q2, p2)) return true;
  if (d3 == 0 && within_segment_box(p1, p2, q1)) return true;
  if (d4 == 0 && within_segment_box(p1, p2, q2)) return true;
  return false;
}

bool contains(std::span<const LonLat> ring, const LonLat& p) {
  ring = open_ring(ring);
  const std::size_t n = ring.size();
  if (n == 0) return false;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const LonLat& a = ring[i];
    const LonLat& b = ring[j];
    if (orient(a, b, p) == 0 && within_segment_box(a, b, p)) return true;
    if ((a.lat > p.lat) != (b.lat > p.lat)) {
      const double x = a.lon + (p.lat - a.lat) * (b.lon - a.lon) / (b.lat - a.lat);
      if (p.lon < x) inside = !inside;
    }
  }
  return inside;
}

bool rings_intersect(std::span<const LonLat> a, std::span<const LonLat> b) {
  a = open_ring(a);
  b = open_ring(b);
  if (a.empty() || b.empty()) return false;
  if (!bounding_box(a).overlaps(bounding_box(b))) return false;

  for (std::size_t i = 0, na = a.size(); i < na; ++i) {
    const LonLat& a0 = a[i];
    const LonLat& a1 = a[(i + 1) % na];
    for (std::size_t j = 0, nb = b.size(); j < nb; ++j) {
      if (segments_intersect(a0, a1, b[j], b[(j + 1) % nb])) return true;
    }
  }
  return contains(a, b.front()) || contains(b, a.front());
}

bool is_simple(std::span<const LonLat> ring) {
  ring = open_ring(ring);
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const LonLat& a0 = ring[i];
    const LonLat& a1 = ring[(i + 1) % n];
    if (a0 == a1) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const LonLat& b0 = ring[j];
      const LonLat& b1 = ring[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex is expected; a fold back along the same line is not.
        const LonLat& shared = (j == i + 1) ? a1 : a0;
        const LonLat& other_a = (j == i + 1) ? a0 : a1;
        const LonLat& other_b = (j == i + 1) ? b1 : b0;
        if (orient(other_a, shared, other_b) == 0) {
          const double dot = (other_a.lon - shared.lon) * (other_b.lon - shared.lon) +
                             (other_a.lat - shared.lat) * (other_b.lat - shared.lat);
          if (dot > 0) return false;
        }
        continue;
      }
      if (segments_intersect(a0, a1, b0, b1)) return false;
    }
  }
  return true;
}

Ring clip_lon(std::span<const LonLat> ring, double limit, bool keep_below) {
  ring = open_ring(ring);
  Ring out;
  const std::size_t n = ring.size();
  auto inside = [&](const LonLat& p) { return keep_below ? p.lon <= limit : p.lon >= limit; };
  for (std::size_t i = 0; i < n; ++i) {
    const LonLat& cur = ring[i];
    const LonLat& nxt = ring[(i + 1) % n];
    const bool cin = inside(cur);
    const bool nin = inside(nxt);
    if (cin) append_if_distinct(out, cur);
    if (cin != nin) {
      const double s = (limit - cur.lon) / (nxt.lon - cur.lon);
      append_if_distinct(out, {limit, cur.lat + s * (nxt.lat - cur.lat)});
    }
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

std::vector<Ring> footprint_rings(const FootprintPolygon& fp) {
  std::vector<Ring> out;
  const std::size_t n = fp.vertices.size();
  if (n < 3) return out;

  Ring ring;
  ring.reserve(n + 3);
  double mean_lat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lon = rad_to_deg(fp.vertices[i].lon);
    const double lat = rad_to_deg(fp.vertices[i].lat);
    mean_lat += lat;
    if (ring.empty()) {
      ring.push_back({wrap_180(lon), lat});
    } else {
      const double prev_raw = rad_to_deg(fp.vertices[i - 1].lon);
      ring.push_back({ring.back().lon + wrap_180(lon - prev_raw), lat});
    }
  }
  mean_lat /= static_cast<double>(n);

  const double closing = wrap_180(rad_to_deg(fp.vertices.front().lon) - rad_to_deg(fp.vertices.back().lon));
  const double winding = ring.back().lon + closing - ring.front().lon;
  if (std::abs(winding) > 180.0) {
    // Encloses a pole: run along the parallel of the pole back to the start.
    const double pole = mean_lat >= 0.0 ? 90.0 : -90.0;
    const double end_lon = ring.front().lon + winding;
    ring.push_back({end_lon, ring.front().lat});
    ring.push_back({end_lon, pole});
    ring.push_back({ring.front().lon, pole});
  }

  const BBox box = bounding_box(ring);
  for (double shift : {-360.0, 0.0, 360.0}) {
    if (box.max_lon + shift < -180.0 || box.min_lon + shift > 180.0) continue;
    Ring shifted = ring;
    for (LonLat& p : shifted) p.lon += shift;
    Ring piece = clip_lon(clip_lon(shifted, 180.0, true), -180.0, false);
    if (piece.size() >= 3 && signed_area(piece) != 0.0) out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace walkeropt::planar
