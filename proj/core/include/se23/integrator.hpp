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
#include <span>
#include <vector>

#include "se23/extended_pose.hpp"
#include "se23/imu.hpp"

namespace se23 {

/// Right-hand side of an ODE on the 5x5 embedding, driven by one IMU sample.
using Dynamics = std::function<Mat5(const ExtendedPose&, const ImuSample&)>;

Dynamics flat_dynamics(const EarthModel& earth);
Dynamics earth_dynamics(const EarthModel& earth);

/// The preintegration ODE: flat kinematics without gravity, started from the
/// identity.
Dynamics delta_dynamics();

/// One classical RK4 step of size h on the raw embedding, input held constant.
ExtendedPose rk4_step(const Dynamics& rhs, const ExtendedPose& state, const ImuSample& u,
                      double h);

struct IntegrationResult {
  ExtendedPose raw;                  // final state as integrated
  ExtendedPose pose;                 // same, rotation projected onto SO(3)
  double orthonormality_error = 0;   // ||R^T R - I||_F of the raw state
  double projection_distance = 0;    // ||R_raw - R_projected||_F
};

/// Integrates `rhs` through the samples with zero-order hold, splitting each
/// sample into `substeps` equal RK4 steps. No retraction happens mid-run; the
/// final rotation is projected once and the projection distance reported.
///
/// Throws Error(kNonFinite) if the state blows up, Error(kNonPositiveDt) on a
/// sample with dt <= 0.
IntegrationResult rk4_integrate(const Dynamics& rhs, const ExtendedPose& t0,
                                std::span<const ImuSample> samples, int substeps);

/// Raw states at every sample boundary (size samples.size() + 1).
std::vector<ExtendedPose> rk4_trajectory(const Dynamics& rhs, const ExtendedPose& t0,
                                         std::span<const ImuSample> samples, int substeps);

}  // namespace se23
