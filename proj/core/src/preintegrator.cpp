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

#include "se23/preintegrator.hpp"

#include "se23/error.hpp"
#include "se23/uncertainty.hpp"

namespace se23 {

Preintegrator::Preintegrator(const PreintegratorOptions& options) : options_(options) { reset(); }

void Preintegrator::reset() {
  delta_ = PreintDelta{};
  delta_.ref_bias = options_.ref_bias;
  delta_.mode = options_.mode;
}

void Preintegrator::add(const ImuSample& measured) {
  if (!(measured.dt > 0.0)) throw Error(ErrorKind::kNonPositiveDt, "Preintegrator::add");
  const ImuSample u = bias_corrected(measured, options_.ref_bias);
  const ExtendedPose upsilon = step_factor(u, options_.mode);
  const Mat9 f = step_matrix(upsilon, u.dt);

  const Mat9 cov = f * delta_.cov * f.transpose() +
                   StepNoise::FromDensities(options_.noise, u.dt).cov_eta;
  const Mat96 jac = f * delta_.bias_jac + step_bias_injection(u, options_.mode, options_.jacobian);
  const ClassicalJacobians classical =
      step_classical_jacobians(delta_.classical, delta_.rot_d, u, options_.mode);

  delta_ = absorb_sample(delta_, u, options_.mode);
  delta_.cov = 0.5 * (cov + cov.transpose());
  delta_.bias_jac = jac;
  delta_.classical = classical;
}

PreintDelta preintegrate(std::span<const ImuSample> measured,
                         const PreintegratorOptions& options) {
  Preintegrator p(options);
  for (const ImuSample& u : measured) p.add(u);
  return p.delta();
}

}  // namespace se23
