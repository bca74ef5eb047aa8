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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "se23/bias.hpp"
#include "se23/harness/trajectory.hpp"
#include "se23/imu.hpp"
#include "se23/preintegration.hpp"

namespace se23::harness {

struct MonteCarloSection {
  std::size_t n_samples = 1000;
};

struct BiasCompareSection {
  std::vector<double> durations{1.0, 10.0, 60.0};
  BiasMagnitude magnitude{1.0, 100.0};
  std::size_t n_draws = 50;
};

/// One experiment description. Every section is optional; missing keys take
/// the defaults below and unknown keys are rejected.
struct Scenario {
  TrajectorySpec trajectory;
  double duration = 1.0;  // s
  double dt = 0.01;       // s
  EarthModel earth = EarthModel::Flat();
  NoiseDensities noise;
  BiasState bias;
  std::uint64_t seed = 0;
  StepMode mode = StepMode::kExactStep;
  unsigned threads = 1;
  MonteCarloSection montecarlo;
  BiasCompareSection bias_compare;
};

/// Throws Error(kInvalidArgument) on malformed JSON, wrong types, unknown keys
/// or a duration that is not a whole number of steps.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);

}  // namespace se23::harness
