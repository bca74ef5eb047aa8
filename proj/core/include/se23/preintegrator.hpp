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

#include <span>

#include "se23/bias.hpp"
#include "se23/imu.hpp"
#include "se23/preintegration.hpp"

namespace se23 {

struct PreintegratorOptions {
  StepMode mode = StepMode::kExactStep;
  BiasState ref_bias;
  NoiseDensities noise;
  JacobianMode jacobian = JacobianMode::kRefined;
};

/// Accumulates a factor, its covariance and its bias Jacobians from raw
/// (biased) measurements, correcting each one with the reference bias.
class Preintegrator {
 public:
  explicit Preintegrator(const PreintegratorOptions& options);

  void add(const ImuSample& measured);
  void reset();

  const PreintDelta& delta() const { return delta_; }
  const PreintegratorOptions& options() const { return options_; }

 private:
  PreintegratorOptions options_;
  PreintDelta delta_;
};

PreintDelta preintegrate(std::span<const ImuSample> measured, const PreintegratorOptions& options);

}  // namespace se23
