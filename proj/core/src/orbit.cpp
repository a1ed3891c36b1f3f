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

#include "walkeropt/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "walkeropt/angles.hpp"
#include "walkeropt/error.hpp"

namespace walkeropt {

namespace {

constexpr double kKeplerTolerance = 1e-12;
constexpr int kKeplerMaxIterations = 50;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

double EarthModel::polar_radius_km() const {
  return equatorial_radius_km * std::sqrt(1.0 - e2);
}

double EarthModel::greenwich_angle(double t) const {
  return wrap_two_pi(gst0 + rotation_rate * t);
}

void EarthModel::validate() const {
  require(std::isfinite(equatorial_radius_km) && equatorial_radius_km > 0.0,
          "earth: equatorial radius must be positive");
  require(std::isfinite(e2) && e2 > 0.0 && e2 < 1.0, "earth: e2 must be in (0, 1)");
  require(std::isfinite(rotation_rate) && rotation_rate > 0.0,
          "earth: rotation rate must be positive");
  require(std::isfinite(mu) && mu > 0.0, "earth: mu must be positive");
  require(std::isfinite(j2) && j2 > 0.0, "earth: J2 must be positive");
  require(std::isfinite(gst0) && gst0 >= 0.0 && gst0 < kTwoPi,
          "earth: gst0 must be in [0, 2*pi)");
}

void OrbitalElements::validate(const EarthModel& earth) const {
  require(std::isfinite(a_km) && a_km > earth.equatorial_radius_km,
          "orbit: semi-major axis must exceed the equatorial radius");
  require(std::isfinite(e) && e >= 0.0 && e < 1.0, "orbit: eccentricity must be in [0, 1)");
  require(a_km * (1.0 - e) > earth.equatorial_radius_km, "orbit: perigee below the surface");
  require(std::isfinite(inclination) && inclination >= 0.0 && inclination <= kPi,
          "orbit: inclination must be in [0, pi]");
  require(std::isfinite(raan) && std::isfinite(argp) && std::isfinite(mean_anomaly) &&
              std::isfinite(epoch),
          "orbit: angles and epoch must be finite");
}

double mean_motion(double a_km, const EarthModel& earth) {
  require(a_km > 0.0, "mean_motion: semi-major axis must be positive");
  return std::sqrt(earth.mu / (a_km * a_km * a_km));
}

SecularRates secular_rates(const OrbitalElements& el, const EarthModel& earth) {
  require(el.a_km > 0.0, "secular_rates: semi-major axis must be positive");
  require(el.e >= 0.0 && el.e < 1.0, "secular_rates: eccentricity must be in [0, 1)");

  // Evaluated in extended precision and rounded once, so each rate is within
  // an ulp or so of the exact expression.
  using real = long double;
  const real a = el.a_km;
  const real e = el.e;
  const real re = earth.equatorial_radius_km;
  const real n = std::sqrt(static_cast<real>(earth.mu) / (a * a * a));
  const real one_minus_e2 = 1.0L - e * e;
  const real sin_i = std::sin(static_cast<real>(el.inclination));
  const real sin2_i = sin_i * sin_i;
  const real p = a * one_minus_e2;

  // Common factor 3 n J2 Re^2 / (2 p^2) of the node and perigee rates.
  const real k = 1.5L * n * earth.j2 * (re / p) * (re / p);
  const real eta = std::sqrt(one_minus_e2);

  SecularRates r;
  r.raan_rate = static_cast<double>(-k * std::cos(static_cast<real>(el.inclination)));
  r.argp_rate = static_cast<double>(k * (2.0L - 2.5L * sin2_i));
  r.mean_anomaly_rate =
      static_cast<double>(n - 1.5L * n * earth.j2 * (re / a) * (re / a) / (eta * eta * eta) * (1.5L * sin2_i - 1.0L));
  return r;
}

double solve_kepler(double mean_anomaly, double e) {
  require(e >= 0.0 && e < 1.0, "solve_kepler: eccentricity must be in [0, 1)");
  if (e == 0.0) return mean_anomaly;

  const double m = wrap_pi(mean_anomaly);
  const double offset = mean_anomaly - m;
  // The root satisfies |E - M| <= e; Newton steps are clamped to that bracket.
  const double lo = m - e;
  const double hi = m + e;
  double ecc = m;
  for (int it = 0; it < kKeplerMaxIterations; ++it) {
    const double f = ecc - e * std::sin(ecc) - m;
    if (std::abs(f) < kKeplerTolerance) return ecc + offset;
    const double fp = 1.0 - e * std::cos(ecc);
    double next = ecc - f / fp;
    if (next < lo) next = 0.5 * (ecc + lo);
    if (next > hi) next = 0.5 * (ecc + hi);
    ecc = next;
  }
  if (std::abs(ecc - e * std::sin(ecc) - m) < kKeplerTolerance) return ecc + offset;
  throw GeometryError("solve_kepler: Newton iteration did not converge");
}

double true_from_eccentric(double eccentric_anomaly, double e) {
  const double half = 0.5 * eccentric_anomaly;
  return 2.0 * std::atan2(std::sqrt(1.0 + e) * std::sin(half), std::sqrt(1.0 - e) * std::cos(half));
}

double eccentric_from_true(double true_anomaly, double e) {
  const double half = 0.5 * true_anomaly;
  return 2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(half), std::sqrt(1.0 + e) * std::cos(half));
}

double mean_from_true(double true_anomaly, double e) {
  if (e == 0.0) return true_anomaly;
  const double ecc = eccentric_from_true(true_anomaly, e);
  return ecc - e * std::sin(ecc);
}

double true_from_mean(double mean_anomaly, double e) {
  if (e == 0.0) return mean_anomaly;
  return true_from_eccentric(solve_kepler(mean_anomaly, e), e);
}

OrbitalElements propagate(const OrbitalElements& el, const EarthModel& earth, double t) {
  const SecularRates rates = secular_rates(el, earth);
  const double dt = t - el.epoch;
  OrbitalElements out = el;
  out.raan = wrap_two_pi(el.raan + rates.raan_rate * dt);
  out.argp = wrap_two_pi(el.argp + rates.argp_rate * dt);
  out.mean_anomaly = wrap_two_pi(el.mean_anomaly + rates.mean_anomaly_rate * dt);
  out.epoch = t;
  return out;
}

double argument_of_latitude(const OrbitalElements& el, const EarthModel& earth, double t) {
  const OrbitalElements now = propagate(el, earth, t);
  return now.argp + true_from_mean(now.mean_anomaly, now.e);
}

GroundPoint subsatellite_point(const OrbitalElements& el, const EarthModel& earth, double t) {
  const OrbitalElements now = propagate(el, earth, t);
  const double u = now.argp + true_from_mean(now.mean_anomaly, now.e);
  const double cos_i = std::cos(now.inclination);
  const double sin_u = std::sin(u);
  const double cos_u = std::cos(u);

  // Right ascension of the satellite minus the Greenwich angle. Writing it
  // with the advanced node keeps elements given at epoch != 0 consistent.
  const double in_plane = std::atan2(cos_i * sin_u, cos_u);
  GroundPoint p;
  p.lon = wrap_pi(now.raan + in_plane - earth.greenwich_angle(t));
  p.lat = std::asin(std::clamp(std::sin(now.inclination) * sin_u, -1.0, 1.0));
  return p;
}

double nodal_period(const OrbitalElements& el, const EarthModel& earth) {
  const SecularRates r = secular_rates(el, earth);
  return kTwoPi / (r.mean_anomaly_rate + r.argp_rate);
}

double longitude_shift_per_period(const OrbitalElements& el, const EarthModel& earth) {
  const SecularRates r = secular_rates(el, earth);
  return -(earth.rotation_rate - r.raan_rate) * nodal_period(el, earth);
}

GroundTrack ground_track(const OrbitalElements& el, const EarthModel& earth, double t_start,
                         double t_end, int n_samples) {
  require(std::isfinite(t_start) && std::isfinite(t_end) && t_end > t_start,
          "ground_track: t_end must be greater than t_start");
  require(n_samples >= 2, "ground_track: at least two samples are required");

  GroundTrack track;
  track.samples.reserve(static_cast<std::size_t>(n_samples));
  const double step = (t_end - t_start) / static_cast<double>(n_samples - 1);
  for (int k = 0; k < n_samples; ++k) {
    const double t = (k == n_samples - 1) ? t_end : t_start + step * k;
    const GroundPoint p = subsatellite_point(el, earth, t);
    track.samples.push_back({t, p.lon, p.lat});
  }
  return track;
}

}  // namespace walkeropt
