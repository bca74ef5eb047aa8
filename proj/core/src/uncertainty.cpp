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

#include "se23/uncertainty.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <cstddef>

#include "se23/error.hpp"
#include "se23/parallel.hpp"
#include "se23/random.hpp"

namespace se23 {
namespace {

Mat9 symmetrized(const Mat9& m) { return 0.5 * (m + m.transpose()); }

// Square root of a PSD matrix that tolerates rank deficiency.
Mat9 psd_sqrt(const Mat9& cov) {
  Eigen::SelfAdjointEigenSolver<Mat9> eig(symmetrized(cov));
  const Vec9 s = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * s.asDiagonal();
}

constexpr std::uint64_t kNaiveCounterOffset = std::uint64_t{1} << 40;

}  // namespace

StepNoise StepNoise::FromDensities(const NoiseDensities& noise, double dt) {
  StepNoise out;
  out.cov_eta.diagonal().segment<3>(0) = (noise.gyro_std * dt).array().square();
  out.cov_eta.diagonal().segment<3>(3) = (noise.accel_std * dt).array().square();
  return out;
}

Mat9 step_matrix(const ExtendedPose& upsilon_k, double dt) {
  return upsilon_k.inverse().adjoint() * f_matrix(dt);
}

ConcentratedGaussian propagate_gaussian(const ConcentratedGaussian& state,
                                        const ExtendedPose& upsilon_k,
                                        const ExtendedPose& gamma_k, double dt,
                                        const StepNoise& noise) {
  const Mat9 f = step_matrix(upsilon_k, dt);
  ConcentratedGaussian out;
  out.mean = gamma_k * phi_map(state.mean, dt) * upsilon_k;
  out.cov = symmetrized(f * state.cov * f.transpose() + noise.cov_eta);
  return out;
}

ConcentratedGaussian propagate_stream(const ConcentratedGaussian& prior,
                                      std::span<const ImuSample> samples,
                                      const NoiseDensities& noise, StepMode mode,
                                      const EarthModel& earth) {
  ConcentratedGaussian state = prior;
  for (const ImuSample& u : samples) {
    if (!(u.dt > 0.0)) throw Error(ErrorKind::kNonPositiveDt, "propagate_stream");
    state = propagate_gaussian(state, step_factor(u, mode), gamma_flat(u.dt, earth), u.dt,
                               StepNoise::FromDensities(noise, u.dt));
  }
  return state;
}

ConcentratedGaussian propagate_through_factor(const ConcentratedGaussian& prior,
                                              const PreintDelta& delta,
                                              const EarthModel& earth) {
  const ExtendedPose upsilon = upsilon_of(delta);
  const Mat9 g = step_matrix(upsilon, delta.duration);
  ConcentratedGaussian out;
  out.mean = apply_flat(delta, prior.mean, earth);
  out.cov = symmetrized(g * prior.cov * g.transpose() + delta.cov);
  return out;
}

Tangent9 exact_error_product(const Tangent9& xi0, std::span<const Tangent9> etas,
                             std::span<const Mat9> f_seq) {
  if (etas.size() != f_seq.size()) {
    throw Error(ErrorKind::kInvalidArgument, "etas and F_seq differ in length");
  }
  const std::size_t k = etas.size();
  // suffix[i] = F_{k-1} ... F_i, suffix[k] = I
  std::vector<Mat9> suffix(k + 1, Mat9::Identity());
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * f_seq[i];

  ExtendedPose product = exp_map(suffix[0] * xi0);
  for (std::size_t i = 0; i < k; ++i) product = product * exp_map(suffix[i + 1] * etas[i]);
  return log_map(product);
}

Tangent9 error_recursion(const Tangent9& xi0, std::span<const Tangent9> etas,
                         std::span<const Mat9> f_seq) {
  if (etas.size() != f_seq.size()) {
    throw Error(ErrorKind::kInvalidArgument, "etas and F_seq differ in length");
  }
  Tangent9 xi = xi0;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    xi = log_map(exp_map(f_seq[i] * xi) * exp_map(etas[i]));
  }
  return xi;
}

Tangent9 sample_tangent(const Mat9& cov, std::mt19937_64& rng) {
  return psd_sqrt(cov) * standard_normal<9>(rng);
}

double mahalanobis_squared(const Mat9& cov, const Tangent9& xi) {
  return xi.dot(cov.ldlt().solve(xi));
}

MonteCarloResult monte_carlo_endpoint(const MonteCarloConfig& config) {
  if (config.n_samples < 2) {
    throw Error(ErrorKind::kInvalidArgument, "monte carlo needs at least two samples");
  }
  MonteCarloResult result;
  result.nominal = config.t0;
  for (const ImuSample& u : config.truth) {
    result.nominal = propagate_step(result.nominal, u, config.mode, config.earth);
  }
  const ExtendedPose nominal_inv = result.nominal.inverse();

  result.samples.resize(config.n_samples);
  parallel_for(config.n_samples, config.threads, [&](std::size_t i) {
    std::mt19937_64 rng = make_rng(config.seed, Stream::kMonteCarlo, i);
    ExtendedPose state = config.t0;
    for (const ImuSample& u : config.truth) {
      const ImuSample measured = corrupt_sample(u, config.noise, config.bias, rng);
      state = propagate_step(state, bias_corrected(measured, config.bias), config.mode,
                             config.earth);
    }
    result.samples[i] = {state, log_map(nominal_inv * state)};
  });
  return result;
}

std::vector<MonteCarloSample> sample_concentrated(const ConcentratedGaussian& g,
                                                  std::size_t n, std::uint64_t seed) {
  const Mat9 root = psd_sqrt(g.cov);
  std::vector<MonteCarloSample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::mt19937_64 rng = make_rng(seed, Stream::kModelSampling, i);
    const Tangent9 xi = root * standard_normal<9>(rng);
    out[i] = {g.mean * exp_map(xi), xi};
  }
  return out;
}

Vec9 naive_error(const ExtendedPose& mean, const ExtendedPose& pose) {
  Vec9 e;
  e << so3_log(mean.rot.transpose() * pose.rot), pose.vel - mean.vel, pose.pos - mean.pos;
  return e;
}

ExtendedPose naive_retract(const ExtendedPose& mean, const Vec9& error) {
  return {mean.rot * so3_exp(error.segment<3>(0)), mean.vel + error.segment<3>(3),
          mean.pos + error.segment<3>(6)};
}

Mat9 naive_step_jacobian(const ExtendedPose& mean, const ImuSample& u, StepMode mode) {
  const ExtendedPose ups = step_factor(u, mode);
  Mat9 a = Mat9::Zero();
  a.block<3, 3>(0, 0) = ups.rot.transpose();
  a.block<3, 3>(3, 0) = -mean.rot * skew(ups.vel);
  a.block<3, 3>(3, 3) = Mat3::Identity();
  a.block<3, 3>(6, 0) = -mean.rot * skew(ups.pos);
  a.block<3, 3>(6, 3) = u.dt * Mat3::Identity();
  a.block<3, 3>(6, 6) = Mat3::Identity();
  return a;
}

Mat9 naive_step_noise(const ExtendedPose& mean, const ImuSample& u, StepMode mode,
                      const NoiseDensities& noise) {
  const Mat3 rot_next = mean.rot * step_factor(u, mode).rot;
  Mat9 g = Mat9::Identity();
  g.block<3, 3>(3, 3) = rot_next;
  g.block<3, 3>(6, 6) = rot_next;
  return symmetrized(g * StepNoise::FromDensities(noise, u.dt).cov_eta * g.transpose());
}

NaiveGaussian naive_additive_propagate(const ExtendedPose& mean, const Mat9& cov,
                                       std::span<const ImuSample> samples,
                                       const NoiseDensities& noise, StepMode mode,
                                       const EarthModel& earth) {
  NaiveGaussian state{mean, cov};
  for (const ImuSample& u : samples) {
    const Mat9 a = naive_step_jacobian(state.mean, u, mode);
    const Mat9 q = naive_step_noise(state.mean, u, mode, noise);
    state.cov = symmetrized(a * state.cov * a.transpose() + q);
    state.mean = propagate_step(state.mean, u, mode, earth);
  }
  return state;
}

std::vector<MonteCarloSample> sample_naive(const NaiveGaussian& g, std::size_t n,
                                           std::uint64_t seed) {
  const Mat9 root = psd_sqrt(g.cov);
  const ExtendedPose mean_inv = g.mean.inverse();
  std::vector<MonteCarloSample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::mt19937_64 rng = make_rng(seed, Stream::kModelSampling, kNaiveCounterOffset + i);
    const ExtendedPose pose = naive_retract(g.mean, root * standard_normal<9>(rng));
    out[i] = {pose, log_map(mean_inv * pose)};
  }
  return out;
}

BananaMetrics banana_metrics(std::span<const Vec3> positions, const Vec3& nominal,
                             const Vec3& along_track, const Vec3& up) {
  if (positions.size() < 7) {
    throw Error(ErrorKind::kInvalidArgument, "banana fit needs at least seven points");
  }
  const Vec3 along = along_track.normalized();
  const Vec3 vertical = (up - up.dot(along) * along).normalized();
  const Vec3 lateral = vertical.cross(along);

  const auto n = static_cast<Eigen::Index>(positions.size());
  Eigen::MatrixXd design(n, 6);
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec3 d = positions[static_cast<std::size_t>(i)] - nominal;
    const double s = d.dot(along);
    const double l = d.dot(lateral);
    design.row(i) << 1.0, s, l, s * s, l * l, s * l;
    out[i] = d.dot(vertical);
  }
  const Eigen::VectorXd c = design.colPivHouseholderQr().solve(out);

  BananaMetrics m;
  m.curvature = 0.5 * (c[3] + c[4]);
  const double mean_out = out.mean();
  m.out_of_plane_std =
      std::sqrt((out.array() - mean_out).square().sum() / static_cast<double>(n - 1));

  const Mat3 cov = sample_covariance<3>(positions);
  Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
  m.principal_std = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  m.principal_axes = eig.eigenvectors();
  return m;
}

}  // namespace se23
