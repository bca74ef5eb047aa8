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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "se23/extended_pose.hpp"
#include "se23/imu.hpp"
#include "se23/preintegration.hpp"

namespace se23 {

struct BiasUpdate {
  Vec6 delta_bias = Vec6::Zero();  // (dbg, dba)

  /// (dbg dt, dba dt, 0).
  Tangent9 lifted(double dt) const {
    Tangent9 out = Tangent9::Zero();
    out.head<6>() = dt * delta_bias;
    return out;
  }
};

/// Injection used by the Jacobian recursion.
///   kSimple:  dt I on the gyro and accel diagonal blocks.
///   kRefined: exact derivative of log(Upsilon(b)^-1 Upsilon(b + db)) at db = 0,
///             i.e. dt D(w dt) on the rotation rows and R_s^T dV_s/db,
///             R_s^T dX_s/db on the velocity and position rows.
enum class JacobianMode { kSimple, kRefined };

std::string_view to_string(JacobianMode mode);
JacobianMode jacobian_mode_from_string(std::string_view name);

/// exp((w + u)^) = exp(w^) (I + (D(w) u)^ + o(u)); the SO(3) right Jacobian.
inline Mat3 d_matrix(const Vec3& omega) { return right_jacobian(omega); }

/// 9x6 injection term of one step.
Mat96 step_bias_injection(const ImuSample& u, StepMode step, JacobianMode mode);

/// J+ = Ad(Upsilon_k^-1) F(dt) J + injection.
Mat96 step_bias_jacobian(const Mat96& j, const ExtendedPose& upsilon_k, const ImuSample& u,
                         JacobianMode mode, StepMode step);

/// Additive first-order Jacobians of (R, V, X) w.r.t. the bias. `rot_before`
/// is the factor rotation before the step.
ClassicalJacobians step_classical_jacobians(const ClassicalJacobians& j,
                                            const Rotation3& rot_before, const ImuSample& u,
                                            StepMode step);

/// d = J db. Apply as Upsilon(b + db) ~ Upsilon(b) exp(d).
Tangent9 bias_discrepancy(const PreintDelta& delta_at_ref, const BiasUpdate& db);

/// Factor relinearized to ref_bias + db through exp(J db).
PreintDelta exponential_correction(const PreintDelta& delta_at_ref, const BiasUpdate& db);

/// Factor relinearized to ref_bias + db with the additive block Jacobians:
/// R exp((JR dbg)^), V + JV db, X + JX db.
PreintDelta classical_correction(const PreintDelta& delta_at_ref, const BiasUpdate& db);

// --- Comparison experiment -------------------------------------------------

struct BiasMagnitude {
  double gyro_deg_per_s = 0.0;
  double accel_milli_g = 0.0;

  BiasState stddev() const;
};

struct BiasComparisonConfig {
  std::vector<double> durations;  // factor lengths, s
  BiasMagnitude magnitude;
  std::size_t n_draws = 50;
  std::uint64_t seed = 0;
  StepMode mode = StepMode::kExactStep;
  unsigned threads = 1;
};

struct RmsRow {
  double duration = 0.0;
  std::string_view method;  // "classical" or "proposed"
  double velocity_rms = 0.0;
  double position_rms = 0.0;
};

/// For each draw, a constant bias b ~ N(0, diag(stddev^2)) corrupts the true
/// stream. Factors are preintegrated at the reference bias 0, relinearized to b
/// by both methods and compared against re-integration at b. The RMS of the
/// velocity and position error norms runs over all draws and all consecutive
/// factors of each length. Rows are ordered by duration, then classical before
/// proposed.
std::vector<RmsRow> bias_comparison_experiment(std::span<const ImuSample> truth,
                                               const BiasComparisonConfig& config);

}  // namespace se23
