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
#include <random>
#include <span>
#include <vector>

#include "se23/extended_pose.hpp"
#include "se23/imu.hpp"
#include "se23/preintegration.hpp"

namespace se23 {

/// T = mean * exp(xi), xi ~ N(0, cov). Right perturbation throughout.
struct ConcentratedGaussian {
  ExtendedPose mean;
  Mat9 cov = Mat9::Zero();
};

/// Covariance of eta_k = (eta_g dt, eta_a dt, 0).
struct StepNoise {
  Mat9 cov_eta = Mat9::Zero();

  static StepNoise FromDensities(const NoiseDensities& noise, double dt);
};

/// F_k = Ad(Upsilon_k^-1) F(dt): exact transport of a right perturbation
/// through one noise-free step.
Mat9 step_matrix(const ExtendedPose& upsilon_k, double dt);

/// mean <- Gamma Phi(mean) Upsilon, cov <- F cov F^T + cov_eta (symmetrized).
ConcentratedGaussian propagate_gaussian(const ConcentratedGaussian& state,
                                        const ExtendedPose& upsilon_k,
                                        const ExtendedPose& gamma_k, double dt,
                                        const StepNoise& noise);

/// Runs propagate_gaussian over a stream of noise-free samples (flat Earth).
ConcentratedGaussian propagate_stream(const ConcentratedGaussian& prior,
                                      std::span<const ImuSample> samples,
                                      const NoiseDensities& noise, StepMode mode,
                                      const EarthModel& earth);

/// Pushes a prior through a whole preintegrated factor:
/// mean = Gamma Phi(mean) Upsilon, cov = G cov G^T + delta.cov with
/// G = Ad(Upsilon^-1) F(duration).
ConcentratedGaussian propagate_through_factor(const ConcentratedGaussian& prior,
                                              const PreintDelta& delta,
                                              const EarthModel& earth);

/// log of exp(F_0^{k-1} xi0) prod_i exp(F_{i+1}^{k-1} eta_i), where
/// F_i^{k-1} = F_{k-1} ... F_i. Throws Error(kAngleNearPi) from the log.
Tangent9 exact_error_product(const Tangent9& xi0, std::span<const Tangent9> etas,
                             std::span<const Mat9> f_seq);

/// Same quantity through exp(xi_{k+1}) = exp(F_k xi_k) exp(eta_k), one step at
/// a time.
Tangent9 error_recursion(const Tangent9& xi0, std::span<const Tangent9> etas,
                         std::span<const Mat9> f_seq);

Tangent9 sample_tangent(const Mat9& cov, std::mt19937_64& rng);

double mahalanobis_squared(const Mat9& cov, const Tangent9& xi);

template <int N>
Eigen::Matrix<double, N, N> sample_covariance(std::span<const Eigen::Matrix<double, N, 1>> xs) {
  Eigen::Matrix<double, N, 1> mean = Eigen::Matrix<double, N, 1>::Zero();
  for (const auto& x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  Eigen::Matrix<double, N, N> cov = Eigen::Matrix<double, N, N>::Zero();
  for (const auto& x : xs) cov += (x - mean) * (x - mean).transpose();
  return cov / static_cast<double>(xs.size() - 1);
}

// --- Monte Carlo -----------------------------------------------------------

struct MonteCarloConfig {
  ExtendedPose t0;
  std::vector<ImuSample> truth;  // noise-free inputs
  EarthModel earth;              // must be flat
  NoiseDensities noise;
  BiasState bias;                // assumed known and compensated
  StepMode mode = StepMode::kExactStep;
  std::size_t n_samples = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct MonteCarloSample {
  ExtendedPose pose;
  Tangent9 xi = Tangent9::Zero();  // log(nominal^-1 pose)
};

struct MonteCarloResult {
  ExtendedPose nominal;
  std::vector<MonteCarloSample> samples;
};

/// Corrupts the true stream once per sample (counter-derived seeds) and
/// propagates each corrupted stream through the full nonlinear model.
/// Throws Error(kInvalidArgument) if n_samples < 2.
MonteCarloResult monte_carlo_endpoint(const MonteCarloConfig& config);

/// Draws poses mean * exp(xi) from a concentrated Gaussian.
std::vector<MonteCarloSample> sample_concentrated(const ConcentratedGaussian& g,
                                                  std::size_t n, std::uint64_t seed);

// --- Additive baseline -----------------------------------------------------

/// Error state (dtheta, dv, dp) with R = mean.R exp(dtheta), V = mean.V + dv,
/// X = mean.X + dp: multiplicative attitude, additive world-frame velocity and
/// position, as in a standard EKF.
Vec9 naive_error(const ExtendedPose& mean, const ExtendedPose& pose);
ExtendedPose naive_retract(const ExtendedPose& mean, const Vec9& error);

/// First-order Jacobian of one flat-Earth step in naive error coordinates.
Mat9 naive_step_jacobian(const ExtendedPose& mean, const ImuSample& u, StepMode mode);

/// Process noise of one step in naive coordinates.
Mat9 naive_step_noise(const ExtendedPose& mean, const ImuSample& u, StepMode mode,
                      const NoiseDensities& noise);

struct NaiveGaussian {
  ExtendedPose mean;
  Mat9 cov = Mat9::Zero();
};

NaiveGaussian naive_additive_propagate(const ExtendedPose& mean, const Mat9& cov,
                                       std::span<const ImuSample> samples,
                                       const NoiseDensities& noise, StepMode mode,
                                       const EarthModel& earth);

std::vector<MonteCarloSample> sample_naive(const NaiveGaussian& g, std::size_t n,
                                           std::uint64_t seed);

// --- Banana shape ----------------------------------------------------------

struct BananaMetrics {
  /// Mean of the along-track and lateral quadratic coefficients of the
  /// least-squares fit out = c0 + c1 s + c2 l + c3 s^2 + c4 l^2 + c5 s l.
  double curvature = 0.0;
  double out_of_plane_std = 0.0;
  /// Position covariance eigen-decomposition, ascending.
  Vec3 principal_std = Vec3::Zero();
  Mat3 principal_axes = Mat3::Zero();
};

/// Shape of an endpoint position cloud around `nominal`. `along_track` and
/// `up` need not be unit length; lateral = up x along_track.
BananaMetrics banana_metrics(std::span<const Vec3> positions, const Vec3& nominal,
                             const Vec3& along_track, const Vec3& up);

}  // namespace se23
