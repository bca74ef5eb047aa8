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

#include <random>
#include <string_view>

#include "se23/extended_pose.hpp"
#include "se23/imu.hpp"

namespace se23 {

/// How a single constant-input sample is turned into a step factor.
///
/// kFirstOrder: (exp(w dt), a dt, a dt^2 / 2), the usual Euler-type
/// discretization.
/// kExactStep: the exact solution of the delta ODE for constant inputs,
/// (exp(w dt), N(w dt) a dt, M(w dt) a dt^2).
enum class StepMode { kFirstOrder, kExactStep };

std::string_view to_string(StepMode mode);

/// Throws Error(kInvalidArgument) for anything but "first_order"/"exact_step".
StepMode step_mode_from_string(std::string_view name);

/// Additive first-order bias Jacobians of the preintegrated factor, the
/// classical scheme: R(b + db) = R Exp(rot_gyro dbg), V(b + db) = V + vel db,
/// X(b + db) = X + pos db. Columns are (gyro, accel).
struct ClassicalJacobians {
  Mat3 rot_gyro = Mat3::Zero();
  Mat36 vel = Mat36::Zero();
  Mat36 pos = Mat36::Zero();
};

/// Preintegrated factor (R, V, X) accumulated from body-frame samples alone.
struct PreintDelta {
  Rotation3 rot_d = Rotation3::Identity();
  Vec3 vel_d = Vec3::Zero();
  Vec3 pos_d = Vec3::Zero();
  double duration = 0.0;
  BiasState ref_bias;
  Mat9 cov = Mat9::Zero();       // right-perturbation exponential coordinates
  Mat96 bias_jac = Mat96::Zero();  // d = bias_jac * db
  StepMode mode = StepMode::kExactStep;
  ClassicalJacobians classical;
};

/// Phi_t: (R, V, X) -> (R, V, X + t V). A group automorphism.
ExtendedPose phi_map(const ExtendedPose& pose, double t);

/// Gamma_t = (I, t g, g t^2 / 2). Requires earth.is_flat().
ExtendedPose gamma_flat(double t, const EarthModel& earth);

/// F(dt) (omega, v, x) = (omega, v, x + dt v), so that Phi(exp(xi)) = exp(F xi).
Mat9 f_matrix(double dt);

/// Step factor Upsilon_k of one bias-corrected sample.
ExtendedPose step_factor(const ImuSample& u, StepMode mode);

/// Derivatives of a step factor with respect to an additive input bias
/// (gyro columns first). rot_gyro is in right-perturbation form.
struct StepFactorDerivative {
  Mat3 rot_gyro = Mat3::Zero();
  Mat36 vel = Mat36::Zero();
  Mat36 pos = Mat36::Zero();
};

StepFactorDerivative step_factor_bias_derivative(const ImuSample& u, StepMode mode);

/// delta <- Phi_dt(delta) Upsilon(u). Only the mean and duration change; the
/// covariance and bias Jacobians belong to the uncertainty and bias modules.
///
/// Throws Error(kNonPositiveDt) when u.dt <= 0, Error(kInvalidArgument) when
/// mixing step modes within one factor.
PreintDelta absorb_sample(const PreintDelta& delta, const ImuSample& u, StepMode mode);

ExtendedPose upsilon_of(const PreintDelta& delta);

/// T_t = Gamma_t Phi_t(T0) Upsilon_t for the factor's duration t.
ExtendedPose apply_flat(const PreintDelta& delta, const ExtendedPose& t0,
                        const EarthModel& earth);

/// One full-state step T <- Gamma_dt Phi_dt(T) Upsilon(u) under flat kinematics.
ExtendedPose propagate_step(const ExtendedPose& state, const ImuSample& u, StepMode mode,
                            const EarthModel& earth);

/// What an IMU reports for the true motion u_true: (w - bg - eta_g, a - ba - eta_a).
ImuSample corrupt_sample(const ImuSample& u_true, const NoiseDensities& noise,
                         const BiasState& bias, std::mt19937_64& rng);

/// Adds a bias estimate back onto a measured sample: (w + bg, a + ba).
ImuSample bias_corrected(const ImuSample& measured, const BiasState& bias);

}  // namespace se23
