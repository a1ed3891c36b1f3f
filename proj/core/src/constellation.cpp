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

#include "walkeropt/constellation.hpp"

#include <numeric>

#include "walkeropt/angles.hpp"
#include "walkeropt/error.hpp"

namespace walkeropt {

void WalkerShell::validate(const EarthModel& earth) const {
  if (n_planes < 1) throw DomainError("walker shell: at least one plane is required");
  if (n_sats < n_planes) throw DomainError("walker shell: N must be at least P");
  if (n_sats % n_planes != 0) throw DomainError("walker shell: N must be a multiple of P");
  if (phase < 0 || phase > n_planes - 1) throw DomainError("walker shell: F must be in [0, P - 1]");
  OrbitalElements el;
  el.a_km = a_km;
  el.e = e;
  el.inclination = inclination;
  el.argp = argp;
  el.raan = raan0;
  el.epoch = epoch;
  el.validate(earth);
}

int ConstellationConfig::total_sats() const {
  return std::accumulate(shells.begin(), shells.end(), 0,
                         [](int acc, const WalkerShell& s) { return acc + s.n_sats; });
}

std::vector<OrbitalElements> shell_elements(const WalkerShell& shell) {
  if (shell.n_planes < 1 || shell.n_sats < shell.n_planes || shell.n_sats % shell.n_planes != 0 ||
      shell.phase < 0 || shell.phase > shell.n_planes - 1) {
    throw DomainError("shell_elements: invalid Walker code");
  }
  const int s = shell.sats_per_plane();
  const double plane_spacing = kTwoPi / shell.n_planes;
  const double slot_spacing = kTwoPi / s;
  const double phase_step = kTwoPi * shell.phase / shell.n_sats;

  std::vector<OrbitalElements> out;
  out.reserve(static_cast<std::size_t>(shell.n_sats));
  for (int m = 1; m <= shell.n_sats; ++m) {
    const int plane = (m + s - 1) / s;
    const int slot = m - (plane - 1) * s;
    const double u = slot_spacing * (slot - 1) + phase_step * (plane - 1);

    OrbitalElements el;
    el.a_km = shell.a_km;
    el.e = shell.e;
    el.inclination = shell.inclination;
    el.raan = wrap_two_pi(shell.raan0 + plane_spacing * (plane - 1));
    el.argp = wrap_two_pi(shell.argp);
    // u = argp + f at epoch.
    el.mean_anomaly = wrap_two_pi(mean_from_true(u - shell.argp, shell.e));
    el.epoch = shell.epoch;
    out.push_back(el);
  }
  return out;
}

std::vector<SatelliteElements> all_elements(const ConstellationConfig& config) {
  std::vector<SatelliteElements> out;
  out.reserve(static_cast<std::size_t>(config.total_sats()));
  for (std::size_t k = 0; k < config.shells.size(); ++k) {
    const std::vector<OrbitalElements> els = shell_elements(config.shells[k]);
    for (std::size_t m = 0; m < els.size(); ++m) {
      out.push_back({SatelliteId{static_cast<int>(k), static_cast<int>(m) + 1}, els[m]});
    }
  }
  return out;
}

}  // namespace walkeropt
