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

// Reference computations written independently of the library, used to
// cross-check it. Nothing here calls into walkeropt except for plain data types.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

struct Rates {
  long double raan;
  long double argp;
  long double mean_anomaly;
};

// Secular J2 rates in extended precision.
inline Rates j2_rates(long double a, long double e, long double inc, long double mu, long double j2,
                      long double re) {
  const long double n = std::sqrt(mu / (a * a * a));
  const long double p = a * (1.0L - e * e);
  const long double ratio = re / p;
  const long double factor = 1.5L * n * j2 * ratio * ratio;
  const long double s = std::sin(inc);
  const long double c = std::cos(inc);
  const long double eta = std::sqrt(1.0L - e * e);
  Rates r;
  r.raan = -factor * c;
  r.argp = factor * (2.0L - 2.5L * s * s);
  r.mean_anomaly = n - 1.5L * n * j2 * (re / a) * (re / a) / (eta * eta * eta) * (1.5L * s * s - 1.0L);
  return r;
}

// Exact closed-form ECEF to geodetic inversion (Heikkinen), independent of any
// iterative scheme. Returns {lat, height}.
inline std::array<double, 2> heikkinen(double x, double y, double z, double a, double e2) {
  const double b = a * std::sqrt(1.0 - e2);
  const double ep2 = (a * a - b * b) / (b * b);
  const double p = std::hypot(x, y);
  const double f = 54.0 * b * b * z * z;
  const double g = p * p + (1.0 - e2) * z * z - e2 * (a * a - b * b);
  const double c = e2 * e2 * f * p * p / (g * g * g);
  const double s = std::cbrt(1.0 + c + std::sqrt(c * c + 2.0 * c));
  const double k = s + 1.0 + 1.0 / s;
  const double pp = f / (3.0 * k * k * g * g);
  const double q = std::sqrt(1.0 + 2.0 * e2 * e2 * pp);
  const double r0 = -pp * e2 * p / (1.0 + q) +
                    std::sqrt(0.5 * a * a * (1.0 + 1.0 / q) - pp * (1.0 - e2) * z * z / (q * (1.0 + q)) -
                              0.5 * pp * p * p);
  const double t = p - e2 * r0;
  const double u = std::sqrt(t * t + z * z);
  const double v = std::sqrt(t * t + (1.0 - e2) * z * z);
  const double z0 = b * b * z / (a * v);
  return {std::atan((z + ep2 * z0) / p), u * (1.0 - b * b / (a * v))};
}

// Earth central angle from nadir to the edge of a cone of half-angle alpha,
// for a spherical Earth of radius re seen from radius r.
inline double cone_edge_central_angle(double r, double re, double alpha) {
  return std::asin(r / re * std::sin(alpha)) - alpha;
}

// Angle between two position vectors.
inline double central_angle(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  const double cx = u[1] * v[2] - u[2] * v[1];
  const double cy = u[2] * v[0] - u[0] * v[2];
  const double cz = u[0] * v[1] - u[1] * v[0];
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot);
}

struct Pt {
  double x;
  double y;
};

// Crossing-number point in polygon (interior only; boundary has measure zero
// for random sampling).
inline bool point_in_polygon(const std::vector<Pt>& poly, Pt p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Pt& a = poly[i];
    const Pt& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

// Fraction of the axis-aligned box covered by the polygon, by uniform sampling.
inline double sampled_area_fraction(const std::vector<Pt>& poly, double x0, double x1, double y0, double y1,
                                    int samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> ux(x0, x1);
  std::uniform_real_distribution<double> uy(y0, y1);
  int hit = 0;
  for (int k = 0; k < samples; ++k) {
    const double x = ux(gen);
    const double y = uy(gen);
    if (point_in_polygon(poly, {x, y})) ++hit;
  }
  return static_cast<double>(hit) / samples;
}

// Root of f in [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iterations = 200) {
  double flo = f(lo);
  for (int k = 0; k < iterations && hi - lo > 0.0; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
