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

#include "se23/extended_pose.hpp"
#include "se23/imu.hpp"
#include "se23/preintegration.hpp"

namespace se23 {

/// State-independent part of rotating-Earth preintegration. Solves
///
///     dGR/dt = -W^ GR,      GR(0) = I
///     dGv/dt = g - W^ Gv,   Gv(0) = 0
///     dGx/dt = Gv - W^ Gx,  Gx(0) = 0
///
/// with W the Earth rate.
struct GammaEarth {
  Rotation3 gamma_r = Rotation3::Identity();
  Vec3 gamma_v = Vec3::Zero();
  Vec3 gamma_x = Vec3::Zero();
  double t = 0.0;
};

/// (R, V, X) -> (R, V + W^ X, X).
ExtendedPose to_primed(const ExtendedPose& pose, const EarthModel& earth);

/// (R, V', X) -> (R, V' - W^ X, X).
ExtendedPose from_primed(const ExtendedPose& primed, const EarthModel& earth);

/// Integrates the Gamma ODEs over [0, t] with steps no longer than dt.
/// GR advances by the exact per-step exponential, Gv and Gx by RK4.
GammaEarth integrate_gamma(const EarthModel& earth, double t, double dt);

/// Reconstructs the unprimed state at t = delta.duration from T0:
///
///     R_t = GR R0 R^u
///     X_t = Gx + GR R0 X^u + t GR V0' + GR X0
///     V_t = Gv + GR R0 V^u + GR V0' - W^ X_t
///
/// Throws Error(kDurationMismatch) if the factor and gammas cover different
/// spans (tolerance 1e-9 s).
ExtendedPose apply_earth(const PreintDelta& delta, const GammaEarth& gammas,
                         const ExtendedPose& t0, const EarthModel& earth);

}  // namespace se23
