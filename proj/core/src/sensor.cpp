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

#include "walkeropt/sensor.hpp"

#include <cmath>

#include "walkeropt/angles.hpp"
#include "walkeropt/error.hpp"

namespace walkeropt {

namespace {

constexpr double kGeodeticTolerance = 1e-12;
constexpr int kGeodeticMaxIterations = 100;
constexpr int kLimbBisections = 60;

Vec3 observation_vector(double off_nadir, double theta) {
  const double t = std::tan(off_nadir);
  return Vec3(t * std::sin(theta), t * std::cos(theta), 1.0).normalized();
}

// R3(-raan) R1(-i) R3(-argp): perifocal to inertial.
Mat3 perifocal_to_inertial(double raan, double inclination, double argp) {
  return (Eigen::AngleAxisd(raan, Vec3::UnitZ()) * Eigen::AngleAxisd(inclination, Vec3::UnitX()) *
          Eigen::AngleAxisd(argp, Vec3::UnitZ()))
      .toRotationMatrix();
}

// Ground point hit by the ray at (off_nadir, theta); falls back to the limb
// point on the same azimuth when the ray passes beside the Earth.
Vec3 boundary_ground_point(const SatelliteStateECEF& state, const Mat3& frame, const EarthModel& earth,
                           double off_nadir, double theta) {
  auto cast = [&](double beta) {
    return intersect_ellipsoid(state.position, frame * observation_vector(beta, theta), earth);
  };
  if (auto hit = cast(off_nadir)) return *hit;

  double lo = 0.0;
  double hi = off_nadir;
  if (!cast(lo)) throw GeometryError("footprint: nadir ray does not reach the ellipsoid");
  for (int k = 0; k < kLimbBisections; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (cast(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return *cast(lo);
}

GeodeticPoint on_surface(const Vec3& p, const EarthModel& earth) {
  GeodeticPoint g = ecef_to_geodetic(p, earth);
  g.lon = wrap_pi(g.lon);
  return g;
}

}  // namespace

SensorModel SensorModel::conic(double half_fov, int boundary_samples) {
  SensorModel s;
  s.half_fov = half_fov;
  s.kind = SensorKind::Conic;
  s.boundary_samples = boundary_samples;
  return s;
}

SensorModel SensorModel::frame(double half_fov) {
  SensorModel s;
  s.half_fov = half_fov;
  s.kind = SensorKind::Frame;
  return s;
}

SensorModel SensorModel::push_broom(double half_fov, double dwell_s) {
  SensorModel s;
  s.half_fov = half_fov;
  s.kind = SensorKind::PushBroom;
  s.dwell_s = dwell_s;
  return s;
}

void SensorModel::validate() const {
  if (!(half_fov > 0.0 && half_fov < 0.5 * kPi)) {
    throw DomainError("sensor: half field of view must be in (0, pi/2)");
  }
  if (kind == SensorKind::Conic && boundary_samples < 8) {
    throw DomainError("sensor: conic sensors need at least 8 boundary samples");
  }
  if (kind == SensorKind::PushBroom && !(dwell_s > 0.0 && std::isfinite(dwell_s))) {
    throw DomainError("sensor: push-broom dwell time must be positive");
  }
}

std::vector<double> boundary_angles(const SensorModel& sensor) {
  switch (sensor.kind) {
    case SensorKind::Frame:
      return {0.25 * kPi, 0.75 * kPi, 1.25 * kPi, 1.75 * kPi};
    case SensorKind::PushBroom:
      return {0.0, kPi};
    case SensorKind::Conic:
      break;
  }
  std::vector<double> out(static_cast<std::size_t>(sensor.boundary_samples));
  for (int k = 0; k < sensor.boundary_samples; ++k) {
    out[static_cast<std::size_t>(k)] = kTwoPi * k / sensor.boundary_samples;
  }
  return out;
}

std::vector<Vec3> boundary_vectors(const SensorModel& sensor) {
  std::vector<Vec3> out;
  for (double theta : boundary_angles(sensor)) out.push_back(observation_vector(sensor.half_fov, theta));
  return out;
}

SatelliteStateECEF satellite_state(const OrbitalElements& el, const EarthModel& earth, double t) {
  const OrbitalElements now = propagate(el, earth, t);
  const double f = true_from_mean(now.mean_anomaly, now.e);
  const double p = now.a_km * (1.0 - now.e * now.e);
  const double r = p / (1.0 + now.e * std::cos(f));
  const double vscale = std::sqrt(earth.mu / p);

  const Vec3 r_pf(r * std::cos(f), r * std::sin(f), 0.0);
  const Vec3 v_pf(-vscale * std::sin(f), vscale * (now.e + std::cos(f)), 0.0);
  const Mat3 q = perifocal_to_inertial(now.raan, now.inclination, now.argp);

  const Mat3 to_fixed = Eigen::AngleAxisd(-earth.greenwich_angle(t), Vec3::UnitZ()).toRotationMatrix();
  SatelliteStateECEF s;
  s.position = to_fixed * (q * r_pf);
  s.velocity = to_fixed * (q * v_pf) - Vec3(0.0, 0.0, earth.rotation_rate).cross(s.position);
  return s;
}

Mat3 sensor_frame(const SatelliteStateECEF& state) {
  const double r = state.position.norm();
  if (!(r > 0.0)) throw GeometryError("sensor_frame: zero position vector");
  const Vec3 z = -state.position / r;
  const Vec3 along = state.velocity - state.velocity.dot(z) * z;
  const double along_norm = along.norm();
  if (!(along_norm > 1e-12 * std::max(1.0, state.velocity.norm()))) {
    throw GeometryError("sensor_frame: velocity is parallel to position");
  }
  const Vec3 x = along / along_norm;
  const Vec3 y = z.cross(x);
  Mat3 m;
  m.col(0) = x;
  m.col(1) = y;
  m.col(2) = z;
  return m;
}

Vec3 sensor_to_ecef(const SatelliteStateECEF& state, const Vec3& v_sensor) {
  return (sensor_frame(state) * v_sensor).normalized();
}

std::optional<Vec3> intersect_ellipsoid(const Vec3& origin, const Vec3& dir, const EarthModel& earth) {
  const double re = earth.equatorial_radius_km;
  const double rp = earth.polar_radius_km();
  const Vec3 scale(1.0 / re, 1.0 / re, 1.0 / rp);
  const Vec3 o = origin.cwiseProduct(scale);
  const Vec3 d = dir.cwiseProduct(scale);

  const double a = d.squaredNorm();
  const double b = 2.0 * o.dot(d);
  const double c = o.squaredNorm() - 1.0;
  if (!(a > 0.0)) return std::nullopt;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;

  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double s0 = q / a;
  double s1 = q != 0.0 ? c / q : s0;
  if (s0 > s1) std::swap(s0, s1);

  double s;
  if (s0 > 0.0) {
    s = s0;
  } else if (s1 > 0.0 && c <= 0.0) {
    s = s1;  // origin inside the ellipsoid
  } else {
    return std::nullopt;
  }
  return Vec3(origin + s * dir);
}

GeodeticPoint ecef_to_geodetic(const Vec3& p, const EarthModel& earth) {
  const double rho = std::hypot(p.x(), p.y());
  if (!(rho > 0.0 || p.z() != 0.0)) throw GeometryError("ecef_to_geodetic: point at the Earth's center");

  const double a = earth.equatorial_radius_km;
  const double e2 = earth.e2;

  GeodeticPoint g;
  g.lon = std::atan2(p.y(), p.x());

  double lat = std::atan2(p.z(), rho);
  bool converged = false;
  for (int it = 0; it < kGeodeticMaxIterations; ++it) {
    const double s = std::sin(lat);
    const double w = std::sqrt(1.0 - e2 * s * s);
    const double next = std::atan2(p.z() + a * e2 * s / w, rho);
    const double delta = std::abs(next - lat);
    lat = next;
    if (delta < kGeodeticTolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw GeometryError("ecef_to_geodetic: latitude iteration did not converge");

  const double s = std::sin(lat);
  const double c = std::cos(lat);
  // Equal to rho / cos(B) - N for the converged latitude; this form stays
  // well conditioned near the poles.
  g.lat = lat;
  g.height = rho * c + p.z() * s - a * std::sqrt(1.0 - e2 * s * s);
  return g;
}

Vec3 geodetic_to_ecef(const GeodeticPoint& g, const EarthModel& earth) {
  const double s = std::sin(g.lat);
  const double c = std::cos(g.lat);
  const double n = earth.equatorial_radius_km / std::sqrt(1.0 - earth.e2 * s * s);
  return {(n + g.height) * c * std::cos(g.lon), (n + g.height) * c * std::sin(g.lon),
          (n * (1.0 - earth.e2) + g.height) * s};
}

FootprintPolygon footprint(const OrbitalElements& el, const EarthModel& earth, const SensorModel& sensor,
                           double t, SatelliteId id) {
  FootprintPolygon fp;
  fp.epoch = t;
  fp.satellite = id;

  const std::vector<double> angles = boundary_angles(sensor);
  if (sensor.kind != SensorKind::PushBroom) {
    const SatelliteStateECEF state = satellite_state(el, earth, t);
    const Mat3 frame = sensor_frame(state);
    fp.vertices.reserve(angles.size());
    for (double theta : angles) {
      fp.vertices.push_back(on_surface(boundary_ground_point(state, frame, earth, sensor.half_fov, theta), earth));
    }
    return fp;
  }

  // The push-broom line sweeps a strip; its footprint at t is the strip
  // covered during [t - dwell/2, t + dwell/2].
  const double half = 0.5 * sensor.dwell_s;
  const SatelliteStateECEF before = satellite_state(el, earth, t - half);
  const SatelliteStateECEF after = satellite_state(el, earth, t + half);
  const Mat3 f0 = sensor_frame(before);
  const Mat3 f1 = sensor_frame(after);
  const double alpha = sensor.half_fov;
  fp.vertices = {
      on_surface(boundary_ground_point(before, f0, earth, alpha, angles[0]), earth),
      on_surface(boundary_ground_point(after, f1, earth, alpha, angles[0]), earth),
      on_surface(boundary_ground_point(after, f1, earth, alpha, angles[1]), earth),
      on_surface(boundary_ground_point(before, f0, earth, alpha, angles[1]), earth),
  };
  return fp;
}

}  // namespace walkeropt
