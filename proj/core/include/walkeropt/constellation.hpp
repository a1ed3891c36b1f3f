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

#include "walkeropt/orbit.hpp"

namespace walkeropt {

// Walker-delta shell N/P/F: N satellites in P evenly spaced planes sharing
// a, e and inclination, with inter-plane phase offset F * 360/N degrees.
struct WalkerShell {
  int n_sats = 1;
  int n_planes = 1;
  int phase = 0;
  double inclination = 0.0;  // rad
  double a_km = 0.0;
  double e = 0.0;
  double argp = 0.0;   // rad
  double raan0 = 0.0;  // rad, node of the first plane
  double epoch = 0.0;  // s

  int sats_per_plane() const { return n_planes > 0 ? n_sats / n_planes : 0; }

  // Throws DomainError unless P >= 1, N >= P, N % P == 0, 0 <= F <= P - 1 and
  // the shared elements are a valid orbit.
  void validate(const EarthModel& earth) const;

  bool operator==(const WalkerShell&) const = default;
};

struct ConstellationConfig {
  std::vector<WalkerShell> shells;

  int total_sats() const;

  bool operator==(const ConstellationConfig&) const = default;
};

struct SatelliteElements {
  SatelliteId id;
  OrbitalElements elements;
};

// Elements of satellites m = 1..N. Satellite m sits in plane
// ceil(m / S) at in-plane slot m - (plane - 1) * S, S = N / P.
std::vector<OrbitalElements> shell_elements(const WalkerShell& shell);

// All shells concatenated in order, tagged with (shell index, m).
std::vector<SatelliteElements> all_elements(const ConstellationConfig& config);

}  // namespace walkeropt
