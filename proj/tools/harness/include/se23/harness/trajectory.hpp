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

#pragma once

#include <string_view>
#include <vector>

#include "se23/extended_pose.hpp"
#include "se23/imu.hpp"

namespace se23::harness {

enum class TrajectoryKind { kStraight, kCircle, kFigure3d };

std::string_view to_string(TrajectoryKind kind);
TrajectoryKind trajectory_kind_from_string(std::string_view name);

/// Parametric path. Horizontal motion at constant speed along a heading that
/// turns at speed / radius (straight: no turn). The altitude follows
/// climb_rate * t + altitude_amplitude * sin(altitude_frequency * t) and the
/// body frame is Rz(heading) Rx(bank).
struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::kStraight;
  double speed = 1.0;                // m/s
  double radius = 50.0;              // m
  double climb_rate = 0.0;           // m/s
  double altitude_amplitude = 0.0;   // m
  double altitude_frequency = 0.0;   // rad/s
  double bank = 0.0;                 // rad
  double initial_heading = 0.0;      // rad
  Vec3 origin = Vec3::Zero();        // m
};

struct KinematicState {
  ExtendedPose pose;
  Vec3 body_rate = Vec3::Zero();     // vee(R^T dR/dt), Earth-relative
  Vec3 acceleration = Vec3::Zero();  // d^2 X / dt^2
};

KinematicState evaluate(const TrajectorySpec& spec, double t);

/// Gyro and accelerometer readings that reproduce the analytic path under the
/// given Earth model:
///   w = vee(R^T dR/dt) + R^T W
///   a = R^T (dV/dt - g + 2 W x V + W x W x X)
ImuSample ideal_measurement(const KinematicState& state, const EarthModel& earth, double dt);

struct ImuLog {
  std::vector<double> t;  // start time of each sample interval
  std::vector<ImuSample> samples;
  std::vector<ExtendedPose> truth;  // poses at t_0 .. t_N (N + 1 entries)
};

/// Samples the path on [0, duration] with step dt. Each measurement is held
/// constant over its interval and evaluated at the interval midpoint.
/// Throws Error(kInvalidArgument) unless duration / dt is an integer.
ImuLog inverse_dynamics(const TrajectorySpec& spec, const EarthModel& earth, double duration,
                        double dt);

/// Step count for duration / dt, rejecting non-integer ratios.
std::size_t step_count(double duration, double dt);

}  // namespace se23::harness
