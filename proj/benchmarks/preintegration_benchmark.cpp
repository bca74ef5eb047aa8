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

#include <benchmark/benchmark.h>

#include <vector>

#include "se23/earth.hpp"
#include "se23/preintegration.hpp"
#include "se23/preintegrator.hpp"
#include "se23/random.hpp"
#include "se23/uncertainty.hpp"

namespace {

using se23::ImuSample;

std::vector<ImuSample> make_stream(std::size_t n) {
  auto rng = se23::make_rng(23, se23::Stream::kNoise);
  std::vector<ImuSample> out(n);
  for (ImuSample& u : out) {
    u.gyro = 0.3 * se23::standard_normal<3>(rng);
    u.accel = se23::standard_normal<3>(rng) + se23::Vec3(0.0, 0.0, se23::kStandardGravity);
    u.dt = 0.01;
  }
  return out;
}

void BM_StepFactor(benchmark::State& state) {
  const ImuSample u = make_stream(1).front();
  const auto mode = static_cast<se23::StepMode>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(se23::step_factor(u, mode));
}
BENCHMARK(BM_StepFactor)
    ->Arg(static_cast<int>(se23::StepMode::kFirstOrder))
    ->Arg(static_cast<int>(se23::StepMode::kExactStep));

void BM_Preintegrate(benchmark::State& state) {
  const auto samples = make_stream(static_cast<std::size_t>(state.range(0)));
  se23::PreintegratorOptions options;
  options.noise.gyro_std.setConstant(1e-3);
  options.noise.accel_std.setConstant(1e-2);
  for (auto _ : state) benchmark::DoNotOptimize(se23::preintegrate(samples, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Preintegrate)->Arg(100)->Arg(1000);

void BM_RiccatiStep(benchmark::State& state) {
  const ImuSample u = make_stream(1).front();
  const se23::ExtendedPose ups = se23::step_factor(u, se23::StepMode::kExactStep);
  const se23::ExtendedPose gamma = se23::gamma_flat(u.dt, se23::EarthModel::Flat());
  const se23::StepNoise noise = se23::StepNoise::FromDensities(
      {se23::Vec3::Constant(1e-3), se23::Vec3::Constant(1e-2)}, u.dt);
  se23::ConcentratedGaussian g{se23::ExtendedPose{}, se23::Mat9::Identity() * 1e-4};
  for (auto _ : state) {
    g = se23::propagate_gaussian(g, ups, gamma, u.dt, noise);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_RiccatiStep);

void BM_IntegrateGamma(benchmark::State& state) {
  const se23::EarthModel earth = se23::EarthModel::Rotating(se23::Vec3(0.0, 0.7, 0.7));
  for (auto _ : state) benchmark::DoNotOptimize(se23::integrate_gamma(earth, 10.0, 0.01));
}
BENCHMARK(BM_IntegrateGamma);

}  // namespace
