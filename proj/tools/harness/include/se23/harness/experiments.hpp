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

#include <vector>

#include "se23/harness/config.hpp"
#include "se23/harness/io.hpp"
#include "se23/uncertainty.hpp"

namespace se23::harness {

struct BananaReport {
  ExtendedPose nominal;
  std::vector<MonteCarloSample> truth;
  std::vector<MonteCarloSample> se23;
  std::vector<MonteCarloSample> naive;
  BananaMetrics truth_metrics;
  BananaMetrics se23_metrics;
  BananaMetrics naive_metrics;
};

/// Endpoint clouds of the scenario from three sources: Monte Carlo through
/// the nonlinear model, samples of the concentrated Gaussian propagated by the
/// Riccati recursion, and samples of the additive-error baseline. Flat Earth
/// only; the initial pose is the trajectory start and is known exactly.
BananaReport run_banana(const Scenario& scenario);

/// truth rows, then se23, then naive; run_id restarts at 0 for each model.
std::vector<CloudRow> cloud_rows(const BananaReport& report);

struct ConsistencyReport {
  Mat9 riccati = Mat9::Zero();
  Mat9 sample = Mat9::Zero();
  double relative_frobenius = 0.0;  // ||sample - riccati||_F / ||riccati||_F
  double mahalanobis_mean = 0.0;
  /// max_i |mean_i| / (std_i / sqrt(N)) of the log-errors.
  double max_mean_z = 0.0;
};

ConsistencyReport run_consistency(const Scenario& scenario);

}  // namespace se23::harness
