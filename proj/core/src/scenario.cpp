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

#include "walkeropt/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

#include "walkeropt/angles.hpp"
#include "walkeropt/error.hpp"

namespace walkeropt {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// View of one JSON object in the scenario tree, carrying its dotted path for
// error messages. An absent section behaves as an empty object.
class Section {
 public:
  Section(const json* node, std::string path) : node_(node), path_(std::move(path)) {
    if (node_ && !node_->is_object()) throw ValidationError(display_path(), "expected an object");
  }

  bool present() const { return node_ != nullptr; }
  bool has(const char* key) const { return node_ && node_->contains(key); }

  std::string key_path(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  Section child(const char* key) const {
    return Section(has(key) ? &node_->at(key) : nullptr, key_path(key));
  }

  const json& raw(const char* key) const { return node_->at(key); }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    if (!node_) return;
    for (const auto& item : node_->items()) {
      bool known = false;
      for (std::string_view k : keys) known = known || item.key() == k;
      if (!known) throw ValidationError(key_path(item.key()), "unknown key");
    }
  }

  double number(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    const json& v = node_->at(key);
    if (!v.is_number()) throw ValidationError(key_path(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ValidationError(key_path(key), "expected a finite number");
    return d;
  }

  double required_number(const char* key) const {
    if (!has(key)) throw ValidationError(key_path(key), "required value is missing");
    return number(key, 0.0);
  }

  long long integer(const char* key, long long fallback) const {
    if (!has(key)) return fallback;
    const json& v = node_->at(key);
    if (!v.is_number_integer()) throw ValidationError(key_path(key), "expected an integer");
    return v.get<long long>();
  }

  std::string text(const char* key, std::string fallback) const {
    if (!has(key)) return fallback;
    const json& v = node_->at(key);
    if (!v.is_string()) throw ValidationError(key_path(key), "expected a string");
    return v.get<std::string>();
  }

 private:
  std::string display_path() const { return path_.empty() ? "<root>" : path_; }

  const json* node_;
  std::string path_;
};

void check(bool ok, const std::string& key, const char* what) {
  if (!ok) throw ValidationError(key, what);
}

int to_int(long long v, const std::string& key) {
  check(v >= -2147483647LL && v <= 2147483647LL, key, "integer out of range");
  return static_cast<int>(v);
}

EarthModel read_earth(const Section& s) {
  s.allow_only({"equatorial_radius_km", "e2", "rotation_rate_rad_s", "mu_km3_s2", "j2", "gst0_deg"});
  EarthModel e;
  e.equatorial_radius_km = s.number("equatorial_radius_km", e.equatorial_radius_km);
  e.e2 = s.number("e2", e.e2);
  e.rotation_rate = s.number("rotation_rate_rad_s", e.rotation_rate);
  e.mu = s.number("mu_km3_s2", e.mu);
  e.j2 = s.number("j2", e.j2);
  const double gst0_deg = s.number("gst0_deg", rad_to_deg(e.gst0));
  check(e.equatorial_radius_km > 0.0, s.key_path("equatorial_radius_km"), "must be positive");
  check(e.e2 > 0.0 && e.e2 < 1.0, s.key_path("e2"), "must be in (0, 1)");
  check(e.rotation_rate > 0.0, s.key_path("rotation_rate_rad_s"), "must be positive");
  check(e.mu > 0.0, s.key_path("mu_km3_s2"), "must be positive");
  check(e.j2 > 0.0, s.key_path("j2"), "must be positive");
  check(gst0_deg >= 0.0 && gst0_deg < 360.0, s.key_path("gst0_deg"), "must be in [0, 360)");
  e.gst0 = deg_to_rad(gst0_deg);
  return e;
}

OrbitDefaults read_orbit(const Section& s, const EarthModel& earth) {
  s.allow_only({"a_km", "e", "argp_deg"});
  OrbitDefaults o;
  o.a_km = s.number("a_km", o.a_km);
  o.e = s.number("e", o.e);
  o.argp = deg_to_rad(s.number("argp_deg", rad_to_deg(o.argp)));
  check(o.a_km > earth.equatorial_radius_km, s.key_path("a_km"), "must exceed the equatorial radius");
  check(o.e >= 0.0 && o.e < 1.0, s.key_path("e"), "eccentricity must be in [0, 1)");
  check(o.a_km * (1.0 - o.e) > earth.equatorial_radius_km, s.key_path("e"), "perigee is below the surface");
  return o;
}

SensorModel read_sensor(const Section& s) {
  s.allow_only({"kind", "half_fov_deg", "boundary_samples", "dwell_s"});
  const std::string kind = s.text("kind", "frame");
  const double half_fov_deg = s.number("half_fov_deg", 30.0);
  check(half_fov_deg > 0.0 && half_fov_deg < 90.0, s.key_path("half_fov_deg"), "must be in (0, 90)");

  SensorModel m;
  if (kind == "frame") {
    m = SensorModel::frame(deg_to_rad(half_fov_deg));
  } else if (kind == "conic") {
    m = SensorModel::conic(deg_to_rad(half_fov_deg));
  } else if (kind == "push_broom") {
    m = SensorModel::push_broom(deg_to_rad(half_fov_deg));
  } else {
    throw ValidationError(s.key_path("kind"), "expected one of frame, conic, push_broom");
  }
  m.boundary_samples = to_int(s.integer("boundary_samples", m.boundary_samples), s.key_path("boundary_samples"));
  m.dwell_s = s.number("dwell_s", m.dwell_s);
  check(m.boundary_samples >= 8, s.key_path("boundary_samples"), "must be at least 8");
  check(m.dwell_s > 0.0, s.key_path("dwell_s"), "must be positive");
  return m;
}

TargetRegion read_region(const Section& s) {
  s.allow_only({"boundary"});
  const std::string key = s.key_path("boundary");
  check(s.has("boundary") && s.raw("boundary").is_array(), key, "expected an array of {lon, lat} points");
  const json& arr = s.raw("boundary");

  TargetRegion region;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Section p(&arr[i], key + "[" + std::to_string(i) + "]");
    p.allow_only({"lon", "lat"});
    const double lon = p.required_number("lon");
    const double lat = p.required_number("lat");
    check(lon >= -180.0 && lon <= 180.0, p.key_path("lon"), "longitude must be in [-180, 180]");
    check(lat >= -90.0 && lat <= 90.0, p.key_path("lat"), "latitude must be in [-90, 90]");
    region.boundary.push_back({lon, lat});
  }
  try {
    region.validate();
  } catch (const DegenerateRegion& e) {
    throw ValidationError(key, e.what());
  }
  return region;
}

AnnealingParams read_annealing(const Section& s) {
  s.allow_only({"t0", "t_min", "alpha", "coverage_target", "n_periods", "n_epochs", "incl_step0_deg",
                "incl_candidates", "acceptance_scale", "seed", "max_total_sats"});
  AnnealingParams a;
  a.t0 = s.number("t0", a.t0);
  a.t_min = s.number("t_min", a.t_min);
  a.alpha = s.number("alpha", a.alpha);
  a.coverage_target = s.required_number("coverage_target");
  a.n_periods = to_int(s.integer("n_periods", a.n_periods), s.key_path("n_periods"));
  a.n_epochs = to_int(s.integer("n_epochs", a.n_epochs), s.key_path("n_epochs"));
  a.incl_step0 = deg_to_rad(s.number("incl_step0_deg", rad_to_deg(a.incl_step0)));
  a.incl_candidates = to_int(s.integer("incl_candidates", a.incl_candidates), s.key_path("incl_candidates"));
  a.acceptance_scale = s.number("acceptance_scale", a.acceptance_scale);
  const long long seed = s.integer("seed", static_cast<long long>(a.rng_seed));
  check(seed >= 0, s.key_path("seed"), "must be non-negative");
  a.rng_seed = static_cast<std::uint64_t>(seed);
  a.max_total_sats = to_int(s.integer("max_total_sats", a.max_total_sats), s.key_path("max_total_sats"));

  check(a.t0 > 0.0, s.key_path("t0"), "must be positive");
  check(a.t_min > 0.0 && a.t_min < a.t0, s.key_path("t_min"), "must be in (0, t0)");
  check(a.alpha > 0.0 && a.alpha < 1.0, s.key_path("alpha"), "must be in (0, 1)");
  check(a.coverage_target >= 0.0 && a.coverage_target <= 1.0, s.key_path("coverage_target"),
        "must be in [0, 1]");
  check(a.n_periods >= 1, s.key_path("n_periods"), "must be at least 1");
  check(a.n_epochs >= 1, s.key_path("n_epochs"), "must be at least 1");
  check(a.incl_step0 >= 0.0, s.key_path("incl_step0_deg"), "must be non-negative");
  check(a.incl_candidates >= 1, s.key_path("incl_candidates"), "must be at least 1");
  check(a.acceptance_scale >= 0.0, s.key_path("acceptance_scale"), "must be non-negative");
  check(a.max_total_sats >= 1, s.key_path("max_total_sats"), "must be at least 1");
  return a;
}

WalkerShell read_shell(const Section& s, const OrbitDefaults& orbit, const EarthModel& earth) {
  s.allow_only({"n_sats", "n_planes", "phase", "inclination_deg", "a_km", "e", "argp_deg", "raan0_deg", "epoch_s"});
  WalkerShell w;
  w.n_sats = to_int(s.integer("n_sats", 0), s.key_path("n_sats"));
  w.n_planes = to_int(s.integer("n_planes", 0), s.key_path("n_planes"));
  w.phase = to_int(s.integer("phase", 0), s.key_path("phase"));
  const double incl_deg = s.required_number("inclination_deg");
  w.a_km = s.number("a_km", orbit.a_km);
  w.e = s.number("e", orbit.e);
  w.argp = deg_to_rad(s.number("argp_deg", rad_to_deg(orbit.argp)));
  w.raan0 = deg_to_rad(s.number("raan0_deg", 0.0));
  w.epoch = s.number("epoch_s", 0.0);

  check(s.has("n_sats"), s.key_path("n_sats"), "required value is missing");
  check(s.has("n_planes"), s.key_path("n_planes"), "required value is missing");
  check(w.n_planes >= 1, s.key_path("n_planes"), "must be at least 1");
  check(w.n_sats >= w.n_planes, s.key_path("n_sats"), "must be at least n_planes");
  check(w.n_sats % w.n_planes == 0, s.key_path("n_sats"), "must be a multiple of n_planes");
  check(w.phase >= 0 && w.phase <= w.n_planes - 1, s.key_path("phase"), "must be in [0, n_planes - 1]");
  check(incl_deg >= 0.0 && incl_deg <= 180.0, s.key_path("inclination_deg"), "must be in [0, 180]");
  check(w.a_km > earth.equatorial_radius_km, s.key_path("a_km"), "must exceed the equatorial radius");
  check(w.e >= 0.0 && w.e < 1.0, s.key_path("e"), "eccentricity must be in [0, 1)");
  check(w.a_km * (1.0 - w.e) > earth.equatorial_radius_km, s.key_path("e"), "perigee is below the surface");
  w.inclination = deg_to_rad(incl_deg);
  return w;
}

ConstellationConfig default_initial(const OrbitDefaults& orbit) {
  WalkerShell w;
  w.n_sats = 6;
  w.n_planes = 3;
  w.phase = 1;
  w.inclination = deg_to_rad(40.0);
  w.a_km = orbit.a_km;
  w.e = orbit.e;
  w.argp = orbit.argp;
  return ConstellationConfig{{w}};
}

std::string sensor_kind_name(SensorKind k) {
  switch (k) {
    case SensorKind::Conic:
      return "conic";
    case SensorKind::PushBroom:
      return "push_broom";
    case SensorKind::Frame:
      break;
  }
  return "frame";
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  Section top(&root, "");
  top.allow_only({"earth", "orbit", "sensor", "region", "grid", "annealing", "constellation", "ground_track", "output"});

  ScenarioConfig cfg;
  cfg.earth = read_earth(top.child("earth"));
  cfg.orbit = read_orbit(top.child("orbit"), cfg.earth);
  cfg.sensor = read_sensor(top.child("sensor"));
  {
    const Section region = top.child("region");
    if (!region.present()) throw ValidationError("region", "required section is missing");
    cfg.region = read_region(region);
  }
  {
    const Section grid = top.child("grid");
    grid.allow_only({"cell_radius_deg"});
    cfg.cell_radius_deg = grid.number("cell_radius_deg", cfg.cell_radius_deg);
    check(cfg.cell_radius_deg > 0.0, grid.key_path("cell_radius_deg"), "must be positive");
  }
  {
    const Section annealing = top.child("annealing");
    if (!annealing.present()) throw ValidationError("annealing.coverage_target", "required value is missing");
    cfg.annealing = read_annealing(annealing);
  }
  {
    const Section constellation = top.child("constellation");
    constellation.allow_only({"shells"});
    if (constellation.has("shells")) {
      const std::string key = constellation.key_path("shells");
      const json& arr = constellation.raw("shells");
      check(arr.is_array(), key, "expected an array of shells");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        cfg.initial.shells.push_back(
            read_shell(Section(&arr[i], key + "[" + std::to_string(i) + "]"), cfg.orbit, cfg.earth));
      }
    } else {
      cfg.initial = default_initial(cfg.orbit);
    }
  }
  {
    const Section track = top.child("ground_track");
    track.allow_only({"samples_per_period"});
    cfg.track_samples_per_period =
        to_int(track.integer("samples_per_period", cfg.track_samples_per_period), track.key_path("samples_per_period"));
    check(cfg.track_samples_per_period >= 2, track.key_path("samples_per_period"), "must be at least 2");
  }
  {
    const Section output = top.child("output");
    output.allow_only({"dir"});
    cfg.output_dir = output.text("dir", cfg.output_dir);
    check(!cfg.output_dir.empty(), output.key_path("dir"), "must not be empty");
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string dump_scenario(const ScenarioConfig& c) {
  ordered_json root;
  root["earth"] = {{"equatorial_radius_km", c.earth.equatorial_radius_km},
                   {"e2", c.earth.e2},
                   {"rotation_rate_rad_s", c.earth.rotation_rate},
                   {"mu_km3_s2", c.earth.mu},
                   {"j2", c.earth.j2},
                   {"gst0_deg", rad_to_deg(c.earth.gst0)}};
  root["orbit"] = {{"a_km", c.orbit.a_km}, {"e", c.orbit.e}, {"argp_deg", rad_to_deg(c.orbit.argp)}};
  root["sensor"] = {{"kind", sensor_kind_name(c.sensor.kind)},
                    {"half_fov_deg", rad_to_deg(c.sensor.half_fov)},
                    {"boundary_samples", c.sensor.boundary_samples},
                    {"dwell_s", c.sensor.dwell_s}};
  ordered_json boundary = ordered_json::array();
  for (const planar::LonLat& p : c.region.boundary) boundary.push_back({{"lon", p.lon}, {"lat", p.lat}});
  root["region"] = {{"boundary", boundary}};
  root["grid"] = {{"cell_radius_deg", c.cell_radius_deg}};
  const AnnealingParams& a = c.annealing;
  root["annealing"] = {{"t0", a.t0},
                       {"t_min", a.t_min},
                       {"alpha", a.alpha},
                       {"coverage_target", a.coverage_target},
                       {"n_periods", a.n_periods},
                       {"n_epochs", a.n_epochs},
                       {"incl_step0_deg", rad_to_deg(a.incl_step0)},
                       {"incl_candidates", a.incl_candidates},
                       {"acceptance_scale", a.acceptance_scale},
                       {"seed", a.rng_seed},
                       {"max_total_sats", a.max_total_sats}};
  ordered_json shells = ordered_json::array();
  for (const WalkerShell& w : c.initial.shells) {
    shells.push_back({{"n_sats", w.n_sats},
                      {"n_planes", w.n_planes},
                      {"phase", w.phase},
                      {"inclination_deg", rad_to_deg(w.inclination)},
                      {"a_km", w.a_km},
                      {"e", w.e},
                      {"argp_deg", rad_to_deg(w.argp)},
                      {"raan0_deg", rad_to_deg(w.raan0)},
                      {"epoch_s", w.epoch}});
  }
  root["constellation"] = {{"shells", shells}};
  root["ground_track"] = {{"samples_per_period", c.track_samples_per_period}};
  root["output"] = {{"dir", c.output_dir}};
  return root.dump(2) + "\n";
}

ScenarioConfig reference_scenario() {
  ScenarioConfig c;
  // Corner order: SW, NW, NE, SE.
  c.region.boundary = {{100.382447, 19.47806}, {100.382447, 43.47806}, {124.382447, 43.47806}, {124.382447, 19.47806}};
  c.annealing.coverage_target = 0.70;
  c.initial = default_initial(c.orbit);
  c.output_dir = "reproduce_out";
  return c;
}

}  // namespace walkeropt
