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

#include "se23/integrator.hpp"

#include <string>

#include "se23/error.hpp"

namespace se23 {
namespace {

void check_finite(const ExtendedPose& state, std::size_t index) {
  if (!state.matrix().allFinite()) {
    throw Error(ErrorKind::kNonFinite,
                "state became non-finite at sample " + std::to_string(index));
  }
}

void check_sample(const ImuSample& u, std::size_t index) {
  if (!(u.dt > 0.0)) {
    throw Error(ErrorKind::kNonPositiveDt, "sample " + std::to_string(index));
  }
}

template <typename Visit>
ExtendedPose integrate(const Dynamics& rhs, const ExtendedPose& t0,
                       std::span<const ImuSample> samples, int substeps, Visit&& visit) {
  if (substeps < 1) {
    throw Error(ErrorKind::kInvalidArgument, "substeps must be >= 1");
  }
  ExtendedPose state = t0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ImuSample& u = samples[i];
    check_sample(u, i);
    const double h = u.dt / substeps;
    for (int s = 0; s < substeps; ++s) state = rk4_step(rhs, state, u, h);
    check_finite(state, i);
    visit(state);
  }
  return state;
}

}  // namespace

Dynamics flat_dynamics(const EarthModel& earth) {
  return [earth](const ExtendedPose& t, const ImuSample& u) { return rhs_flat(t, u, earth); };
}

Dynamics earth_dynamics(const EarthModel& earth) {
  return [earth](const ExtendedPose& t, const ImuSample& u) { return rhs_earth(t, u, earth); };
}

Dynamics delta_dynamics() { return flat_dynamics(EarthModel::Flat(Vec3::Zero())); }

ExtendedPose rk4_step(const Dynamics& rhs, const ExtendedPose& state, const ImuSample& u,
                      double h) {
  const Mat5 y = state.matrix();
  const auto at = [](const Mat5& m) { return ExtendedPose::FromMatrix(m); };
  const Mat5 k1 = rhs(state, u);
  const Mat5 k2 = rhs(at(y + 0.5 * h * k1), u);
  const Mat5 k3 = rhs(at(y + 0.5 * h * k2), u);
  const Mat5 k4 = rhs(at(y + h * k3), u);
  return at(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

IntegrationResult rk4_integrate(const Dynamics& rhs, const ExtendedPose& t0,
                                std::span<const ImuSample> samples, int substeps) {
  IntegrationResult out;
  out.raw = integrate(rhs, t0, samples, substeps, [](const ExtendedPose&) {});
  out.pose = out.raw;
  out.pose.rot = project_to_rotation(out.raw.rot);
  out.orthonormality_error = orthonormality_error(out.raw.rot);
  out.projection_distance = (out.raw.rot - out.pose.rot).norm();
  return out;
}

std::vector<ExtendedPose> rk4_trajectory(const Dynamics& rhs, const ExtendedPose& t0,
                                         std::span<const ImuSample> samples, int substeps) {
  std::vector<ExtendedPose> states;
  states.reserve(samples.size() + 1);
  states.push_back(t0);
  integrate(rhs, t0, samples, substeps,
            [&states](const ExtendedPose& s) { states.push_back(s); });
  return states;
}

}  // namespace se23
