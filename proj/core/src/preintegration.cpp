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

#include "se23/preintegration.hpp"

#include <string>

#include "se23/error.hpp"

namespace se23 {

std::string_view to_string(StepMode mode) {
  return mode == StepMode::kFirstOrder ? "first_order" : "exact_step";
}

StepMode step_mode_from_string(std::string_view name) {
  if (name == "first_order") return StepMode::kFirstOrder;
  if (name == "exact_step") return StepMode::kExactStep;
  throw Error(ErrorKind::kInvalidArgument, "unknown step mode '" + std::string(name) + "'");
}

ExtendedPose phi_map(const ExtendedPose& pose, double t) {
  return {pose.rot, pose.vel, pose.pos + t * pose.vel};
}

ExtendedPose gamma_flat(double t, const EarthModel& earth) {
  if (!earth.is_flat()) {
    throw Error(ErrorKind::kInvalidArgument, "gamma_flat requires a zero Earth rate");
  }
  return {Mat3::Identity(), t * earth.gravity, 0.5 * t * t * earth.gravity};
}

Mat9 f_matrix(double dt) {
  Mat9 f = Mat9::Identity();
  f.block<3, 3>(6, 3) = dt * Mat3::Identity();
  return f;
}

ExtendedPose step_factor(const ImuSample& u, StepMode mode) {
  const Vec3 phi = u.gyro * u.dt;
  const double dt2 = u.dt * u.dt;
  if (mode == StepMode::kFirstOrder) {
    return {so3_exp(phi), u.accel * u.dt, 0.5 * dt2 * u.accel};
  }
  return {so3_exp(phi), left_jacobian(phi) * u.accel * u.dt,
          second_order_jacobian(phi) * u.accel * dt2};
}

StepFactorDerivative step_factor_bias_derivative(const ImuSample& u, StepMode mode) {
  const double dt = u.dt;
  const double dt2 = dt * dt;
  const Vec3 phi = u.gyro * dt;
  StepFactorDerivative d;
  d.rot_gyro = right_jacobian(phi) * dt;
  if (mode == StepMode::kFirstOrder) {
    d.vel.rightCols<3>() = dt * Mat3::Identity();
    d.pos.rightCols<3>() = 0.5 * dt2 * Mat3::Identity();
    return d;
  }
  d.vel.leftCols<3>() = left_jacobian_apply_derivative(phi, u.accel) * dt2;
  d.vel.rightCols<3>() = left_jacobian(phi) * dt;
  d.pos.leftCols<3>() = second_order_apply_derivative(phi, u.accel) * dt2 * dt;
  d.pos.rightCols<3>() = second_order_jacobian(phi) * dt2;
  return d;
}

PreintDelta absorb_sample(const PreintDelta& delta, const ImuSample& u, StepMode mode) {
  if (!(u.dt > 0.0)) throw Error(ErrorKind::kNonPositiveDt, "absorb_sample");
  if (delta.duration > 0.0 && delta.mode != mode) {
    throw Error(ErrorKind::kInvalidArgument, "cannot mix step modes within one factor");
  }
  const ExtendedPose next = phi_map(upsilon_of(delta), u.dt) * step_factor(u, mode);
  PreintDelta out = delta;
  out.rot_d = next.rot;
  out.vel_d = next.vel;
  out.pos_d = next.pos;
  out.duration += u.dt;
  out.mode = mode;
  return out;
}

ExtendedPose upsilon_of(const PreintDelta& delta) {
  return {delta.rot_d, delta.vel_d, delta.pos_d};
}

ExtendedPose apply_flat(const PreintDelta& delta, const ExtendedPose& t0,
                        const EarthModel& earth) {
  const double t = delta.duration;
  return gamma_flat(t, earth) * phi_map(t0, t) * upsilon_of(delta);
}

ExtendedPose propagate_step(const ExtendedPose& state, const ImuSample& u, StepMode mode,
                            const EarthModel& earth) {
  return gamma_flat(u.dt, earth) * phi_map(state, u.dt) * step_factor(u, mode);
}

ImuSample corrupt_sample(const ImuSample& u_true, const NoiseDensities& noise,
                         const BiasState& bias, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ImuSample out = u_true;
  for (int i = 0; i < 3; ++i) out.gyro[i] -= bias.gyro[i] + noise.gyro_std[i] * normal(rng);
  for (int i = 0; i < 3; ++i) out.accel[i] -= bias.accel[i] + noise.accel_std[i] * normal(rng);
  return out;
}

ImuSample bias_corrected(const ImuSample& measured, const BiasState& bias) {
  return {measured.gyro + bias.gyro, measured.accel + bias.accel, measured.dt};
}

}  // namespace se23
