// Copyright 2026 The se23 Authors
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

#include "se23/harness/config.hpp"

#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>

#include "se23/error.hpp"

namespace se23::harness {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, "config: " + what);
}

void require_keys(const json& obj, std::string_view where,
                  std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(std::string(where) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const auto name : allowed) known = known || key == name;
    if (!known) fail("unknown key '" + key + "' in " + std::string(where));
  }
}

double number(const json& v, const std::string& name) {
  if (!v.is_number()) fail(name + " must be a number");
  return v.get<double>();
}

std::size_t count(const json& v, const std::string& name) {
  if (!v.is_number_unsigned()) fail(name + " must be a non-negative integer");
  return v.get<std::size_t>();
}

/// A scalar broadcasts to all three axes.
Vec3 vec3(const json& v, const std::string& name) {
  if (v.is_number()) return Vec3::Constant(v.get<double>());
  if (!v.is_array() || v.size() != 3) fail(name + " must be a number or a 3-array");
  return {number(v[0], name), number(v[1], name), number(v[2], name)};
}

template <typename T>
void read_if(const json& obj, const char* key, T& out, T (*convert)(const json&, const std::string&)) {
  if (obj.contains(key)) out = convert(obj.at(key), key);
}

void parse_trajectory(const json& j, TrajectorySpec& t) {
  require_keys(j, "trajectory",
               {"kind", "speed", "radius", "climb_rate", "altitude_amplitude",
                "altitude_frequency", "bank", "initial_heading", "origin"});
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) fail("trajectory.kind must be a string");
    t.kind = trajectory_kind_from_string(j.at("kind").get<std::string>());
  }
  read_if(j, "speed", t.speed, number);
  read_if(j, "radius", t.radius, number);
  read_if(j, "climb_rate", t.climb_rate, number);
  read_if(j, "altitude_amplitude", t.altitude_amplitude, number);
  read_if(j, "altitude_frequency", t.altitude_frequency, number);
  read_if(j, "bank", t.bank, number);
  read_if(j, "initial_heading", t.initial_heading, number);
  read_if(j, "origin", t.origin, vec3);
  if (t.kind != TrajectoryKind::kStraight && !(t.radius > 0.0)) fail("trajectory.radius must be positive");
}

void parse_earth(const json& j, EarthModel& e) {
  require_keys(j, "earth", {"gravity", "earth_rate"});
  read_if(j, "gravity", e.gravity, vec3);
  read_if(j, "earth_rate", e.earth_rate, vec3);
}

void parse_noise(const json& j, NoiseDensities& n) {
  require_keys(j, "noise", {"gyro_std", "accel_std"});
  read_if(j, "gyro_std", n.gyro_std, vec3);
  read_if(j, "accel_std", n.accel_std, vec3);
  if ((n.gyro_std.array() < 0.0).any() || (n.accel_std.array() < 0.0).any()) {
    fail("noise standard deviations must be non-negative");
  }
}

void parse_bias(const json& j, BiasState& b) {
  require_keys(j, "bias", {"gyro", "accel"});
  read_if(j, "gyro", b.gyro, vec3);
  read_if(j, "accel", b.accel, vec3);
}

void parse_bias_compare(const json& j, BiasCompareSection& s) {
  require_keys(j, "bias_compare", {"durations", "gyro_deg_per_s", "accel_milli_g", "n_draws"});
  if (j.contains("durations")) {
    const json& d = j.at("durations");
    if (!d.is_array() || d.empty()) fail("bias_compare.durations must be a non-empty array");
    s.durations.clear();
    for (const json& v : d) {
      const double t = number(v, "bias_compare.durations");
      if (!(t > 0.0)) fail("bias_compare.durations must be positive");
      s.durations.push_back(t);
    }
  }
  read_if(j, "gyro_deg_per_s", s.magnitude.gyro_deg_per_s, number);
  read_if(j, "accel_milli_g", s.magnitude.accel_milli_g, number);
  read_if(j, "n_draws", s.n_draws, count);
  if (s.n_draws == 0) fail("bias_compare.n_draws must be positive");
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  require_keys(root, "scenario",
               {"trajectory", "duration", "dt", "earth", "noise", "bias", "seed", "mode",
                "threads", "montecarlo", "bias_compare"});
  Scenario s;
  if (root.contains("trajectory")) parse_trajectory(root.at("trajectory"), s.trajectory);
  read_if(root, "duration", s.duration, number);
  read_if(root, "dt", s.dt, number);
  if (root.contains("earth")) parse_earth(root.at("earth"), s.earth);
  if (root.contains("noise")) parse_noise(root.at("noise"), s.noise);
  if (root.contains("bias")) parse_bias(root.at("bias"), s.bias);
  if (root.contains("seed")) {
    if (!root.at("seed").is_number_unsigned()) fail("seed must be a non-negative integer");
    s.seed = root.at("seed").get<std::uint64_t>();
  }
  if (root.contains("mode")) {
    if (!root.at("mode").is_string()) fail("mode must be a string");
    s.mode = step_mode_from_string(root.at("mode").get<std::string>());
  }
  if (root.contains("threads")) {
    const std::size_t t = count(root.at("threads"), "threads");
    if (t == 0) fail("threads must be positive");
    s.threads = static_cast<unsigned>(t);
  }
  if (root.contains("montecarlo")) {
    const json& mc = root.at("montecarlo");
    require_keys(mc, "montecarlo", {"n_samples"});
    read_if(mc, "n_samples", s.montecarlo.n_samples, count);
  }
  if (root.contains("bias_compare")) parse_bias_compare(root.at("bias_compare"), s.bias_compare);

  step_count(s.duration, s.dt);
  return s;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Scenario load_scenario(const std::filesystem::path& path) { return parse_scenario(read_text(path)); }

}  // namespace se23::harness
