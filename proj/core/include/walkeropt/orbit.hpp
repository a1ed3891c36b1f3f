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

#include <vector>

namespace walkeropt {

// Reference ellipsoid, rotation and J2 gravity constants. Distances in km,
// angles in radians, time in seconds. Defaults are WGS84 / EGM96.
struct EarthModel {
  double equatorial_radius_km = 6378.137;
  double e2 = 6.69437999e-3;              // first eccentricity squared
  double rotation_rate = 7.2921159e-5;    // rad/s
  double mu = 398600.4418;                // km^3/s^2
  double j2 = 1.08263e-3;
  double gst0 = 0.0;                      // Greenwich sidereal angle at t = 0

  double polar_radius_km() const;

  // Greenwich sidereal angle at simulation time t (s), wrapped to [0, 2*pi).
  double greenwich_angle(double t) const;

  // Throws DomainError naming the offending field.
  void validate() const;

  bool operator==(const EarthModel&) const = default;
};

// Classical (mean) orbital elements at `epoch`, seconds after the simulation
// reference time t = 0.
struct OrbitalElements {
  double a_km = 0.0;
  double e = 0.0;
  double inclination = 0.0;
  double raan = 0.0;
  double argp = 0.0;
  double mean_anomaly = 0.0;
  double epoch = 0.0;

  // Requires a > Re, 0 <= e < 1, 0 <= i <= pi and perigee above the surface.
  void validate(const EarthModel& earth) const;

  bool operator==(const OrbitalElements&) const = default;
};

// Identifies one satellite inside a constellation: the shell index (0-based)
// and the Walker satellite number m (1-based).
struct SatelliteId {
  int shell = 0;
  int number = 1;

  auto operator<=>(const SatelliteId&) const = default;
};

struct SecularRates {
  double raan_rate = 0.0;          // dOmega/dt, rad/s
  double argp_rate = 0.0;          // domega/dt, rad/s
  double mean_anomaly_rate = 0.0;  // dM/dt including the mean motion, rad/s
};

// sqrt(mu / a^3)
double mean_motion(double a_km, const EarthModel& earth);

// First-order J2 secular drift of the node, perigee and mean anomaly.
// Throws DomainError for a <= 0 or e outside [0, 1).
SecularRates secular_rates(const OrbitalElements& el, const EarthModel& earth);

// Solves M = E - e sin E for the eccentric anomaly by Newton iteration
// (|residual| < 1e-12, at most 50 steps). Returns M unchanged when e == 0.
double solve_kepler(double mean_anomaly, double e);

double true_from_eccentric(double eccentric_anomaly, double e);
double eccentric_from_true(double true_anomaly, double e);
double mean_from_true(double true_anomaly, double e);
double true_from_mean(double mean_anomaly, double e);

// Elements with raan, argp and mean anomaly advanced linearly by the secular
// rates to time t; a, e, i unchanged. Angles wrapped to [0, 2*pi).
OrbitalElements propagate(const OrbitalElements& el, const EarthModel& earth, double t);

// Argument of latitude u = argp + f at time t.
double argument_of_latitude(const OrbitalElements& el, const EarthModel& earth, double t);

struct GroundPoint {
  double lon = 0.0;  // (-pi, pi]
  double lat = 0.0;  // [-pi/2, pi/2]
};

// Subsatellite point at time t (geocentric latitude on the rotating Earth).
GroundPoint subsatellite_point(const OrbitalElements& el, const EarthModel& earth, double t);

// Time between successive ascending-node crossings: 2*pi / (dM/dt + domega/dt).
double nodal_period(const OrbitalElements& el, const EarthModel& earth);

// Westward shift of the ground track between adjacent revolutions:
// -(omega_E - dOmega/dt) * T_nodal.
double longitude_shift_per_period(const OrbitalElements& el, const EarthModel& earth);

struct TrackSample {
  double t = 0.0;
  double lon = 0.0;
  double lat = 0.0;
};

struct GroundTrack {
  std::vector<TrackSample> samples;
};

// n_samples evenly spaced subsatellite points over [t_start, t_end], both
// endpoints included. Throws DomainError on an empty range or n_samples < 2.
GroundTrack ground_track(const OrbitalElements& el, const EarthModel& earth, double t_start,
                         double t_end, int n_samples);

}  // namespace walkeropt
