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

#include <span>
#include <vector>

#include "walkeropt/sensor.hpp"

// Polygon predicates in the equirectangular lon/lat plane (degrees). Rings
// are closed implicitly: the last vertex connects back to the first, and a
// repeated closing vertex is tolerated. All predicates use closed sets, so
// touching boundaries count as intersecting.
namespace walkeropt::planar {

struct LonLat {
  double lon = 0.0;
  double lat = 0.0;

  bool operator==(const LonLat&) const = default;
};

using Ring = std::vector<LonLat>;

struct BBox {
  double min_lon = 0.0;
  double min_lat = 0.0;
  double max_lon = 0.0;
  double max_lat = 0.0;

  bool overlaps(const BBox& o) const {
    return min_lon <= o.max_lon && o.min_lon <= max_lon && min_lat <= o.max_lat && o.min_lat <= max_lat;
  }
};

BBox bounding_box(std::span<const LonLat> ring);

// Signed shoelace area; positive for counter-clockwise rings.
double signed_area(std::span<const LonLat> ring);

// Closed-segment intersection, including collinear overlap and endpoint touch.
bool segments_intersect(const LonLat& p1, const LonLat& p2, const LonLat& q1, const LonLat& q2);

// Even-odd containment; points on the boundary count as inside.
bool contains(std::span<const LonLat> ring, const LonLat& p);

// True if the closed regions bounded by the two rings share a point. Bounding
// boxes first, then edge-pair crossings, then mutual vertex containment.
bool rings_intersect(std::span<const LonLat> a, std::span<const LonLat> b);

// No two non-adjacent edges intersect and no adjacent edges fold back.
bool is_simple(std::span<const LonLat> ring);

// Keeps the part of the ring with lon <= limit (keep_below) or lon >= limit.
Ring clip_lon(std::span<const LonLat> ring, double limit, bool keep_below);

// Footprint vertices (radians) as planar rings in degrees with longitudes
// inside [-180, 180]. Longitudes are unwrapped along the ring; a ring that
// winds around a pole is closed through that pole; a ring that crosses the
// antimeridian is split into its two sides.
std::vector<Ring> footprint_rings(const FootprintPolygon& fp);

}  // namespace walkeropt::planar
