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

#include "se23/harness/trajectory.hpp"

#include <cmath>
#include <string>

#include "se23/error.hpp"

namespace se23::harness {

std::string_view to_string(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::kStraight:
      return "straight";
    case TrajectoryKind::kCircle:
      return "circle";
    case TrajectoryKind::kFigure3d:
      return "figure3d";
  }
  return "straight";
}

TrajectoryKind trajectory_kind_from_string(std::string_view name) {
  if (name == "straight") return TrajectoryKind::kStraight;
  if (name == "circle") return TrajectoryKind::kCircle;
  if (name == "figure3d") return TrajectoryKind::kFigure3d;
  throw Error(ErrorKind::kInvalidArgument, "unknown trajectory kind '" + std::string(name) + "'");
}

KinematicState evaluate(const TrajectorySpec& spec, double t) {
  const double s = spec.speed;
  const double kappa = spec.kind == TrajectoryKind::kStraight ? 0.0 : 1.0 / spec.radius;
  const double h0 = spec.initial_heading;
  const double psi = h0 + kappa * s * t;
  const double psi_dot = kappa * s;

  Vec3 pos = spec.origin;
  if (kappa == 0.0) {
    pos += s * t * Vec3(std::cos(h0), std::sin(h0), 0.0);
  } else {
    pos += spec.radius *
           Vec3(std::sin(psi) - std::sin(h0), std::cos(h0) - std::cos(psi), 0.0);
  }
  Vec3 vel(s * std::cos(psi), s * std::sin(psi), 0.0);
  Vec3 acc(-s * psi_dot * std::sin(psi), s * psi_dot * std::cos(psi), 0.0);

  if (spec.kind == TrajectoryKind::kFigure3d) {
    const double a = spec.altitude_amplitude;
    const double nu = spec.altitude_frequency;
    pos.z() += spec.climb_rate * t + a * std::sin(nu * t);
    vel.z() = spec.climb_rate + a * nu * std::cos(nu * t);
    acc.z() = -a * nu * nu * std::sin(nu * t);
  }

  const Mat3 roll = so3_exp(spec.bank * Vec3::UnitX());

  KinematicState out;
  out.pose = {so3_exp(psi * Vec3::UnitZ()) * roll, vel, pos};
  out.body_rate = psi_dot * roll.transpose() * Vec3::UnitZ();
  out.acceleration = acc;
  return out;
}

ImuSample ideal_measurement(const KinematicState& state, const EarthModel& earth, double dt) {
  const Vec3& w = earth.earth_rate;
  const ExtendedPose& p = state.pose;
  const Mat3 rt = p.rot.transpose();
  ImuSample u;
  u.gyro = state.body_rate + rt * w;
  u.accel = rt * (state.acceleration - earth.gravity + 2.0 * w.cross(p.vel) +
                  w.cross(w.cross(p.pos)));
  u.dt = dt;
  return u;
}

std::size_t step_count(double duration, double dt) {
  if (!(dt > 0.0)) throw Error(ErrorKind::kNonPositiveDt, "scenario dt");
  if (!(duration > 0.0)) throw Error(ErrorKind::kInvalidArgument, "scenario duration");
  const double ratio = duration / dt;
  const double n = std::round(ratio);
  if (std::abs(ratio - n) > 1e-9 * std::max(1.0, n)) {
    throw Error(ErrorKind::kInvalidArgument, "duration is not a whole number of steps");
  }
  return static_cast<std::size_t>(n);
}

ImuLog inverse_dynamics(const TrajectorySpec& spec, const EarthModel& earth, double duration,
                        double dt) {
  const std::size_t n = step_count(duration, dt);
  ImuLog log;
  log.t.reserve(n);
  log.samples.reserve(n);
  log.truth.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * dt;
    log.t.push_back(t);
    log.samples.push_back(ideal_measurement(evaluate(spec, t + 0.5 * dt), earth, dt));
    log.truth.push_back(evaluate(spec, t).pose);
  }
  log.truth.push_back(evaluate(spec, static_cast<double>(n) * dt).pose);
  return log;
}

}  // namespace se23::harness
