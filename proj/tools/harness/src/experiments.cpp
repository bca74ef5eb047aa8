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

#include "se23/harness/experiments.hpp"

#include <cmath>

#include "se23/harness/trajectory.hpp"

namespace se23::harness {
namespace {

std::vector<Vec3> positions(const std::vector<MonteCarloSample>& cloud) {
  std::vector<Vec3> out;
  out.reserve(cloud.size());
  for (const MonteCarloSample& s : cloud) out.push_back(s.pose.pos);
  return out;
}

MonteCarloConfig monte_carlo_config(const Scenario& scenario, const ImuLog& log) {
  MonteCarloConfig c;
  c.t0 = log.truth.front();
  c.truth = log.samples;
  c.earth = scenario.earth;
  c.noise = scenario.noise;
  c.bias = scenario.bias;
  c.mode = scenario.mode;
  c.n_samples = scenario.montecarlo.n_samples;
  c.seed = scenario.seed;
  c.threads = scenario.threads;
  return c;
}

}  // namespace

BananaReport run_banana(const Scenario& scenario) {
  const ImuLog log = inverse_dynamics(scenario.trajectory, scenario.earth, scenario.duration,
                                      scenario.dt);
  const MonteCarloConfig config = monte_carlo_config(scenario, log);
  MonteCarloResult mc = monte_carlo_endpoint(config);

  const ConcentratedGaussian prior{config.t0, Mat9::Zero()};
  const ConcentratedGaussian se23 =
      propagate_stream(prior, log.samples, scenario.noise, scenario.mode, scenario.earth);
  const NaiveGaussian naive = naive_additive_propagate(config.t0, Mat9::Zero(), log.samples,
                                                       scenario.noise, scenario.mode,
                                                       scenario.earth);

  BananaReport r;
  r.nominal = mc.nominal;
  r.truth = std::move(mc.samples);
  r.se23 = sample_concentrated(se23, config.n_samples, scenario.seed);
  r.naive = sample_naive(naive, config.n_samples, scenario.seed);

  const Vec3 along = r.nominal.vel.norm() > 0.0 ? r.nominal.vel : Vec3::UnitX();
  const Vec3 up = -scenario.earth.gravity;
  r.truth_metrics = banana_metrics(positions(r.truth), r.nominal.pos, along, up);
  r.se23_metrics = banana_metrics(positions(r.se23), r.nominal.pos, along, up);
  r.naive_metrics = banana_metrics(positions(r.naive), r.nominal.pos, along, up);
  return r;
}

std::vector<CloudRow> cloud_rows(const BananaReport& report) {
  std::vector<CloudRow> rows;
  rows.reserve(report.truth.size() + report.se23.size() + report.naive.size());
  const auto append = [&rows](const std::vector<MonteCarloSample>& cloud, const char* model) {
    for (std::size_t i = 0; i < cloud.size(); ++i) rows.push_back({i, model, cloud[i]});
  };
  append(report.truth, "truth");
  append(report.se23, "se23");
  append(report.naive, "naive");
  return rows;
}

ConsistencyReport run_consistency(const Scenario& scenario) {
  const ImuLog log = inverse_dynamics(scenario.trajectory, scenario.earth, scenario.duration,
                                      scenario.dt);
  const MonteCarloConfig config = monte_carlo_config(scenario, log);
  const MonteCarloResult mc = monte_carlo_endpoint(config);

  ConsistencyReport r;
  r.riccati = propagate_stream({config.t0, Mat9::Zero()}, log.samples, scenario.noise,
                               scenario.mode, scenario.earth)
                  .cov;
  std::vector<Tangent9> xis;
  xis.reserve(mc.samples.size());
  for (const MonteCarloSample& s : mc.samples) xis.push_back(s.xi);
  r.sample = sample_covariance<9>(std::span<const Tangent9>(xis));
  r.relative_frobenius = (r.sample - r.riccati).norm() / r.riccati.norm();

  const auto n = static_cast<double>(xis.size());
  Tangent9 mean = Tangent9::Zero();
  double mahalanobis = 0.0;
  for (const Tangent9& xi : xis) {
    mean += xi;
    mahalanobis += mahalanobis_squared(r.riccati, xi);
  }
  mean /= n;
  r.mahalanobis_mean = mahalanobis / n;
  for (int i = 0; i < 9; ++i) {
    const double se = std::sqrt(r.sample(i, i) / n);
    r.max_mean_z = std::max(r.max_mean_z, std::abs(mean[i]) / se);
  }
  return r;
}

}  // namespace se23::harness
