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

#include <functional>

#include "se23/extended_pose.hpp"
#include "se23/types.hpp"

namespace se23 {

inline constexpr double kStandardGravity = 9.81;      // m/s^2
inline constexpr double kEarthRotationRate = 7.2921159e-5;  // rad/s

/// One IMU increment. Inputs are held constant over [t, t + dt).
struct ImuSample {
  Vec3 gyro = Vec3::Zero();   // rad/s, body frame
  Vec3 accel = Vec3::Zero();  // m/s^2 specific force, body frame
  double dt = 0.0;            // s
};

struct BiasState {
  Vec3 gyro = Vec3::Zero();   // rad/s
  Vec3 accel = Vec3::Zero();  // m/s^2

  Vec6 stacked() const {
    Vec6 b;
    b << gyro, accel;
    return b;
  }
  static BiasState FromStacked(const Vec6& b) { return {b.head<3>(), b.tail<3>()}; }
};

/// Per-sample (discrete) standard deviations of the additive sensor noise.
struct NoiseDensities {
  Vec3 gyro_std = Vec3::Zero();   // rad/s
  Vec3 accel_std = Vec3::Zero();  // m/s^2
};

/// Gravity and Earth rotation expressed in the local navigation frame.
/// The kinematics are flat exactly when earth_rate is identically zero.
struct EarthModel {
  Vec3 gravity = Vec3(0.0, 0.0, -kStandardGravity);
  Vec3 earth_rate = Vec3::Zero();

  bool is_flat() const { return (earth_rate.array() == 0.0).all(); }

  static EarthModel Flat(const Vec3& gravity = Vec3(0.0, 0.0, -kStandardGravity)) {
    return {gravity, Vec3::Zero()};
  }
  static EarthModel Rotating(const Vec3& axis, double rate = kEarthRotationRate,
                             const Vec3& gravity = Vec3(0.0, 0.0, -kStandardGravity)) {
    return {gravity, rate * axis.normalized()};
  }
};

/// Time derivative of the 5x5 embedding under flat-Earth kinematics:
/// dR = R w^, dV = g + R a, dX = V. Requires earth.is_flat().
Mat5 rhs_flat(const ExtendedPose& pose, const ImuSample& u, const EarthModel& earth);

/// Rotating-Earth kinematics:
/// dR = -W^ R + R w^, dV = g + R a - 2 W^ V - W^ W^ X, dX = V.
Mat5 rhs_earth(const ExtendedPose& pose, const ImuSample& u, const EarthModel& earth);

/// The term f(T) of the dynamics W T + f(T) + T U: V placed in column 5.
Mat5 velocity_term(const ExtendedPose& pose);

/// Matrices of the group-affine split d/dt T = W T + f(T) + T U.
///
/// In primed mode the state is (R, V + W^ X, X) and the rotation block of W
/// carries -Earth_rate^.
struct AffineEmbedding {
  Mat5 w = Mat5::Zero();
  Mat5 u = Mat5::Zero();

  Mat5 operator()(const ExtendedPose& pose) const {
    const Mat5 m = pose.matrix();
    return w * m + velocity_term(pose) + m * u;
  }
};

AffineEmbedding affine_embedding(const ImuSample& u, const EarthModel& earth, bool primed);

using PoseVectorField = std::function<Mat5(const ExtendedPose&)>;

/// ||g(T1 T2) - g(T1) T2 - T1 g(T2) + T1 g(Id) T2||_F. Zero for group-affine g.
double group_affine_residual(const PoseVectorField& g, const ExtendedPose& t1,
                             const ExtendedPose& t2);

}  // namespace se23
