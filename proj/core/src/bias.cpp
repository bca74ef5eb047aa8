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

#include "se23/bias.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "se23/error.hpp"
#include "se23/parallel.hpp"
#include "se23/preintegrator.hpp"
#include "se23/random.hpp"
#include "se23/uncertainty.hpp"

namespace se23 {

std::string_view to_string(JacobianMode mode) {
  return mode == JacobianMode::kSimple ? "simple" : "refined";
}

JacobianMode jacobian_mode_from_string(std::string_view name) {
  if (name == "simple") return JacobianMode::kSimple;
  if (name == "refined") return JacobianMode::kRefined;
  throw Error(ErrorKind::kInvalidArgument, "unknown jacobian mode '" + std::string(name) + "'");
}

Mat96 step_bias_injection(const ImuSample& u, StepMode step, JacobianMode mode) {
  Mat96 b = Mat96::Zero();
  if (mode == JacobianMode::kSimple) {
    b.block<3, 3>(0, 0) = u.dt * Mat3::Identity();
    b.block<3, 3>(3, 3) = u.dt * Mat3::Identity();
    return b;
  }
  const StepFactorDerivative d = step_factor_bias_derivative(u, step);
  const Mat3 rot_t = so3_exp(u.gyro * u.dt).transpose();
  b.block<3, 3>(0, 0) = d.rot_gyro;
  b.middleRows<3>(3) = rot_t * d.vel;
  b.middleRows<3>(6) = rot_t * d.pos;
  return b;
}

Mat96 step_bias_jacobian(const Mat96& j, const ExtendedPose& upsilon_k, const ImuSample& u,
                         JacobianMode mode, StepMode step) {
  return step_matrix(upsilon_k, u.dt) * j + step_bias_injection(u, step, mode);
}

ClassicalJacobians step_classical_jacobians(const ClassicalJacobians& j,
                                            const Rotation3& rot_before, const ImuSample& u,
                                            StepMode step) {
  const ExtendedPose ups = step_factor(u, step);
  const StepFactorDerivative d = step_factor_bias_derivative(u, step);
  Mat36 rot_full = Mat36::Zero();
  rot_full.leftCols<3>() = j.rot_gyro;

  ClassicalJacobians out;
  out.rot_gyro = ups.rot.transpose() * j.rot_gyro + d.rot_gyro;
  out.vel = j.vel + rot_before * (-skew(ups.vel) * rot_full + d.vel);
  out.pos = j.pos + u.dt * j.vel + rot_before * (-skew(ups.pos) * rot_full + d.pos);
  return out;
}

Tangent9 bias_discrepancy(const PreintDelta& delta_at_ref, const BiasUpdate& db) {
  return delta_at_ref.bias_jac * db.delta_bias;
}

PreintDelta exponential_correction(const PreintDelta& delta_at_ref, const BiasUpdate& db) {
  const ExtendedPose corrected =
      upsilon_of(delta_at_ref) * exp_map(bias_discrepancy(delta_at_ref, db));
  PreintDelta out = delta_at_ref;
  out.rot_d = corrected.rot;
  out.vel_d = corrected.vel;
  out.pos_d = corrected.pos;
  out.ref_bias = BiasState::FromStacked(delta_at_ref.ref_bias.stacked() + db.delta_bias);
  return out;
}

PreintDelta classical_correction(const PreintDelta& delta_at_ref, const BiasUpdate& db) {
  const ClassicalJacobians& j = delta_at_ref.classical;
  PreintDelta out = delta_at_ref;
  out.rot_d = delta_at_ref.rot_d * so3_exp(j.rot_gyro * db.delta_bias.head<3>());
  out.vel_d = delta_at_ref.vel_d + j.vel * db.delta_bias;
  out.pos_d = delta_at_ref.pos_d + j.pos * db.delta_bias;
  out.ref_bias = BiasState::FromStacked(delta_at_ref.ref_bias.stacked() + db.delta_bias);
  return out;
}

BiasState BiasMagnitude::stddev() const {
  constexpr double kMilliG = 1e-3 * kStandardGravity;
  return {Vec3::Constant(gyro_deg_per_s * std::numbers::pi / 180.0),
          Vec3::Constant(accel_milli_g * kMilliG)};
}

std::vector<RmsRow> bias_comparison_experiment(std::span<const ImuSample> truth,
                                               const BiasComparisonConfig& config) {
  if (truth.empty()) throw Error(ErrorKind::kInvalidArgument, "empty IMU stream");
  if (config.n_draws == 0) throw Error(ErrorKind::kInvalidArgument, "n_draws must be positive");
  const double dt = truth.front().dt;
  std::vector<std::size_t> window;
  for (const double t : config.durations) {
    const auto n = static_cast<std::size_t>(std::llround(t / dt));
    if (n == 0 || std::abs(static_cast<double>(n) * dt - t) > 1e-9 * std::max(1.0, t) ||
        truth.size() % n != 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "factor length " + std::to_string(t) + " s does not divide the trajectory");
    }
    window.push_back(n);
  }

  const BiasState sigma = config.magnitude.stddev();
  const std::size_t n_t = window.size();
  // per draw, per duration: {classical v, classical p, proposed v, proposed p} squared sums
  std::vector<std::vector<std::array<double, 4>>> sums(config.n_draws,
                                                       std::vector<std::array<double, 4>>(n_t));

  parallel_for(config.n_draws, config.threads, [&](std::size_t draw) {
    std::mt19937_64 rng = make_rng(config.seed, Stream::kBiasDraws, draw);
    const Vec6 z = standard_normal<6>(rng);
    BiasState bias;
    bias.gyro = sigma.gyro.cwiseProduct(z.head<3>());
    bias.accel = sigma.accel.cwiseProduct(z.tail<3>());

    std::vector<ImuSample> measured(truth.begin(), truth.end());
    for (ImuSample& u : measured) {
      u.gyro -= bias.gyro;
      u.accel -= bias.accel;
    }
    const BiasUpdate db{bias.stacked()};
    PreintegratorOptions at_ref{config.mode, BiasState{}, NoiseDensities{}, JacobianMode::kRefined};
    PreintegratorOptions at_true = at_ref;
    at_true.ref_bias = bias;

    for (std::size_t k = 0; k < n_t; ++k) {
      std::array<double, 4> acc{};
      for (std::size_t start = 0; start < measured.size(); start += window[k]) {
        const std::span<const ImuSample> w(measured.data() + start, window[k]);
        const PreintDelta ref = preintegrate(w, at_ref);
        const PreintDelta reint = preintegrate(w, at_true);
        const PreintDelta cls = classical_correction(ref, db);
        const PreintDelta prop = exponential_correction(ref, db);
        acc[0] += (cls.vel_d - reint.vel_d).squaredNorm();
        acc[1] += (cls.pos_d - reint.pos_d).squaredNorm();
        acc[2] += (prop.vel_d - reint.vel_d).squaredNorm();
        acc[3] += (prop.pos_d - reint.pos_d).squaredNorm();
      }
      sums[draw][k] = acc;
    }
  });

  std::vector<RmsRow> rows;
  for (std::size_t k = 0; k < n_t; ++k) {
    std::array<double, 4> total{};
    for (std::size_t draw = 0; draw < config.n_draws; ++draw) {
      for (int c = 0; c < 4; ++c) total[c] += sums[draw][k][c];
    }
    const double count =
        static_cast<double>(config.n_draws) * static_cast<double>(truth.size() / window[k]);
    rows.push_back({config.durations[k], "classical", std::sqrt(total[0] / count),
                    std::sqrt(total[1] / count)});
    rows.push_back({config.durations[k], "proposed", std::sqrt(total[2] / count),
                    std::sqrt(total[3] / count)});
  }
  return rows;
}

}  // namespace se23
