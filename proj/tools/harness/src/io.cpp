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

#include "se23/harness/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "se23/error.hpp"

namespace se23::harness {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::kInvalidArgument, what); }

constexpr const char* kImuHeader = "t,wx,wy,wz,ax,ay,az";
constexpr const char* kTruthHeader = "t,r11,r12,r13,r21,r22,r23,r31,r32,r33,vx,vy,vz,px,py,pz";
constexpr const char* kCloudHeader = "run_id,model,px,py,pz,xi1,xi2,xi3,xi4,xi5,xi6,xi7,xi8,xi9";

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<double> parse_row(const std::string& line, std::size_t expected) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      fail("non-numeric field '" + field + "'");
    }
    if (used != field.size() || !std::isfinite(v)) fail("bad numeric field '" + field + "'");
    out.push_back(v);
  }
  if (out.size() != expected) {
    fail("expected " + std::to_string(expected) + " fields, got " + std::to_string(out.size()));
  }
  return out;
}

template <typename Matrix>
json flatten(const Matrix& m) {
  json arr = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) arr.push_back(m(r, c));
  }
  return arr;
}

template <typename Matrix>
Matrix unflatten(const json& obj, const char* key) {
  if (!obj.contains(key)) fail(std::string("missing key '") + key + "'");
  const json& arr = obj.at(key);
  Matrix m;
  if (!arr.is_array() || arr.size() != static_cast<std::size_t>(m.size())) {
    fail(std::string("'") + key + "' must hold " + std::to_string(m.size()) + " numbers");
  }
  std::size_t i = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!arr[i].is_number()) fail(std::string("'") + key + "' must hold numbers");
      m(r, c) = arr[i++].get<double>();
    }
  }
  return m;
}

double scalar(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    fail(std::string("missing numeric key '") + key + "'");
  }
  return obj.at(key).get<double>();
}

json parse_object(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("expected a JSON object");
  return j;
}

std::string dump(const json& j) {
  // nlohmann prints doubles with round-trip precision.
  return j.dump(2) + "\n";
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_imu_csv(std::ostream& out, std::span<const double> t,
                   std::span<const ImuSample> samples) {
  out << kImuHeader << '\n';
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const ImuSample& u = samples[k];
    out << format_double(t[k]);
    for (int i = 0; i < 3; ++i) out << ',' << format_double(u.gyro[i]);
    for (int i = 0; i < 3; ++i) out << ',' << format_double(u.accel[i]);
    out << '\n';
  }
}

void write_truth_csv(std::ostream& out, std::span<const double> t,
                     std::span<const ExtendedPose> poses) {
  out << kTruthHeader << '\n';
  for (std::size_t k = 0; k < poses.size(); ++k) {
    const ExtendedPose& p = poses[k];
    out << format_double(t[k]);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) out << ',' << format_double(p.rot(r, c));
    }
    for (int i = 0; i < 3; ++i) out << ',' << format_double(p.vel[i]);
    for (int i = 0; i < 3; ++i) out << ',' << format_double(p.pos[i]);
    out << '\n';
  }
}

ImuCsv read_imu_csv(std::istream& in, double fallback_dt) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kImuHeader) {
    fail(std::string("IMU CSV header must be '") + kImuHeader + "'");
  }
  ImuCsv log;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<double> v = parse_row(line, 7);
    log.t.push_back(v[0]);
    ImuSample u;
    u.gyro = Vec3(v[1], v[2], v[3]);
    u.accel = Vec3(v[4], v[5], v[6]);
    log.samples.push_back(u);
  }
  if (log.samples.empty()) fail("IMU CSV holds no samples");

  double dt = fallback_dt;
  const std::size_t n = log.t.size();
  if (n > 1) {
    dt = (log.t.back() - log.t.front()) / static_cast<double>(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
      const double step = log.t[k] - log.t[k - 1];
      if (!(step > 0.0)) fail("IMU timestamps must be strictly increasing");
      if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(log.t[k]))) {
        fail("IMU timestamps must be uniformly spaced");
      }
    }
  }
  if (!(dt > 0.0)) throw Error(ErrorKind::kNonPositiveDt, "IMU log step");
  for (ImuSample& u : log.samples) u.dt = dt;
  return log;
}

void write_cloud_csv(std::ostream& out, std::span<const CloudRow> rows) {
  out << kCloudHeader << '\n';
  for (const CloudRow& row : rows) {
    out << row.run_id << ',' << row.model;
    for (int i = 0; i < 3; ++i) out << ',' << format_double(row.sample.pose.pos[i]);
    for (int i = 0; i < 9; ++i) out << ',' << format_double(row.sample.xi[i]);
    out << '\n';
  }
}

void write_rms_csv(std::ostream& out, std::span<const RmsRow> rows) {
  out << "T_seconds,method,velocity_rms,position_rms\n";
  for (const RmsRow& r : rows) {
    out << format_double(r.duration) << ',' << r.method << ',' << format_double(r.velocity_rms)
        << ',' << format_double(r.position_rms) << '\n';
  }
}

std::string delta_to_json(const PreintDelta& d) {
  json j;
  j["rot_d"] = flatten(d.rot_d);
  j["vel_d"] = flatten(d.vel_d);
  j["pos_d"] = flatten(d.pos_d);
  j["duration"] = d.duration;
  j["ref_bias"] = {{"gyro", flatten(d.ref_bias.gyro)}, {"accel", flatten(d.ref_bias.accel)}};
  j["cov"] = flatten(d.cov);
  j["bias_jac"] = flatten(d.bias_jac);
  j["mode"] = std::string(to_string(d.mode));
  j["classical_jac"] = {{"rot_gyro", flatten(d.classical.rot_gyro)},
                        {"vel", flatten(d.classical.vel)},
                        {"pos", flatten(d.classical.pos)}};
  return dump(j);
}

PreintDelta delta_from_json(const std::string& text) {
  const json j = parse_object(text);
  PreintDelta d;
  d.rot_d = unflatten<Mat3>(j, "rot_d");
  d.vel_d = unflatten<Vec3>(j, "vel_d");
  d.pos_d = unflatten<Vec3>(j, "pos_d");
  d.duration = scalar(j, "duration");
  if (!j.contains("ref_bias") || !j.at("ref_bias").is_object()) fail("missing 'ref_bias'");
  d.ref_bias.gyro = unflatten<Vec3>(j.at("ref_bias"), "gyro");
  d.ref_bias.accel = unflatten<Vec3>(j.at("ref_bias"), "accel");
  d.cov = unflatten<Mat9>(j, "cov");
  d.bias_jac = unflatten<Mat96>(j, "bias_jac");
  if (!j.contains("mode") || !j.at("mode").is_string()) fail("missing 'mode'");
  d.mode = step_mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("classical_jac")) {
    const json& c = j.at("classical_jac");
    d.classical.rot_gyro = unflatten<Mat3>(c, "rot_gyro");
    d.classical.vel = unflatten<Mat36>(c, "vel");
    d.classical.pos = unflatten<Mat36>(c, "pos");
  }
  return d;
}

std::string gamma_to_json(const GammaEarth& g) {
  json j;
  j["gamma_r"] = flatten(g.gamma_r);
  j["gamma_v"] = flatten(g.gamma_v);
  j["gamma_x"] = flatten(g.gamma_x);
  j["t"] = g.t;
  return dump(j);
}

GammaEarth gamma_from_json(const std::string& text) {
  const json j = parse_object(text);
  GammaEarth g;
  g.gamma_r = unflatten<Mat3>(j, "gamma_r");
  g.gamma_v = unflatten<Vec3>(j, "gamma_v");
  g.gamma_x = unflatten<Vec3>(j, "gamma_x");
  g.t = scalar(j, "t");
  return g;
}

std::string gaussian_to_json(const ConcentratedGaussian& g) {
  json j;
  j["mean"] = flatten(g.mean.matrix());
  j["cov"] = flatten(g.cov);
  return dump(j);
}

ConcentratedGaussian gaussian_from_json(const std::string& text) {
  const json j = parse_object(text);
  ConcentratedGaussian g;
  g.mean = ExtendedPose::FromMatrix(unflatten<Mat5>(j, "mean"));
  g.cov = unflatten<Mat9>(j, "cov");
  return g;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorKind::kInvalidArgument, "failed writing " + path.string());
}

}  // namespace se23::harness
