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

#include <optional>
#include <vector>

#include "walkeropt/orbit.hpp"
#include "walkeropt/vec.hpp"

namespace walkeropt {

enum class SensorKind {
  Conic,      // circular cone sampled at boundary_samples azimuths
  Frame,      // four corners at 45, 135, 225 and 315 degrees
  PushBroom,  // two cross-track edges, swept over dwell_s seconds
};

// Sensor field of view. The boundary of the view cone is half_fov away from
// the boresight for every boundary direction.
struct SensorModel {
  double half_fov = 0.0;  // rad, in (0, pi/2)
  SensorKind kind = SensorKind::Frame;
  int boundary_samples = 64;
  double dwell_s = 60.0;

  static SensorModel conic(double half_fov, int boundary_samples = 64);
  static SensorModel frame(double half_fov);
  static SensorModel push_broom(double half_fov, double dwell_s = 60.0);

  void validate() const;

  bool operator==(const SensorModel&) const = default;
};

// Earth-fixed position (km) and velocity (km/s).
struct SatelliteStateECEF {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
};

// Geodetic longitude/latitude (rad) and ellipsoidal height (km).
struct GeodeticPoint {
  double lon = 0.0;
  double lat = 0.0;
  double height = 0.0;
};

// Ground footprint of one satellite at one epoch. Vertices are on the
// ellipsoid, ordered by boundary angle; the ring closes implicitly.
struct FootprintPolygon {
  std::vector<GeodeticPoint> vertices;
  double epoch = 0.0;
  SatelliteId satellite;
};

// Boundary angles theta for the sensor kind, ascending in [0, 2*pi).
std::vector<double> boundary_angles(const SensorModel& sensor);

// Unit observation vectors (tan(a) sin(theta), tan(a) cos(theta), 1) / norm,
// one per boundary angle, in the sensor frame (X along track, Z to nadir).
std::vector<Vec3> boundary_vectors(const SensorModel& sensor);

// Element set to Earth-fixed state: perifocal -> inertial, then rotation by
// the Greenwich angle at t. The velocity is relative to the rotating Earth.
SatelliteStateECEF satellite_state(const OrbitalElements& el, const EarthModel& earth, double t);

// Columns are the sensor axes X (flight direction), Y = Z x X, Z (nadir), in
// Earth-fixed coordinates. Throws GeometryError if velocity is parallel to
// position.
Mat3 sensor_frame(const SatelliteStateECEF& state);

Vec3 sensor_to_ecef(const SatelliteStateECEF& state, const Vec3& v_sensor);

// Nearest forward intersection of the ray origin + s*dir (s > 0) with the
// reference ellipsoid; nullopt when the ray misses or points away.
std::optional<Vec3> intersect_ellipsoid(const Vec3& origin, const Vec3& dir, const EarthModel& earth);

// Cartesian -> geodetic by fixed-point iteration on the latitude (tolerance
// 1e-12 rad). Throws GeometryError at the origin or if 100 steps do not
// converge.
GeodeticPoint ecef_to_geodetic(const Vec3& p, const EarthModel& earth);

Vec3 geodetic_to_ecef(const GeodeticPoint& g, const EarthModel& earth);

// Nadir-pointing footprint. Rays that miss the ellipsoid are replaced by the
// limb point along the same azimuth. Throws GeometryError if nothing is seen.
FootprintPolygon footprint(const OrbitalElements& el, const EarthModel& earth,
                           const SensorModel& sensor, double t, SatelliteId id = {});

}  // namespace walkeropt
