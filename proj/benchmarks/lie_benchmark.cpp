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

#include "se23/extended_pose.hpp"
#include "se23/random.hpp"

namespace {

using se23::ExtendedPose;
using se23::Tangent9;

Tangent9 sample_tangent(std::uint64_t counter) {
  auto rng = se23::make_rng(17, se23::Stream::kModelSampling, counter);
  return se23::standard_normal<9>(rng);
}

void BM_Exp(benchmark::State& state) {
  const Tangent9 xi = sample_tangent(0);
  for (auto _ : state) benchmark::DoNotOptimize(se23::exp_map(xi));
}
BENCHMARK(BM_Exp);

void BM_Log(benchmark::State& state) {
  const ExtendedPose t = se23::exp_map(0.5 * sample_tangent(1));
  for (auto _ : state) benchmark::DoNotOptimize(se23::log_map(t));
}
BENCHMARK(BM_Log);

void BM_Compose(benchmark::State& state) {
  const ExtendedPose a = se23::exp_map(sample_tangent(2));
  const ExtendedPose b = se23::exp_map(sample_tangent(3));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Compose);

void BM_Adjoint(benchmark::State& state) {
  const ExtendedPose a = se23::exp_map(sample_tangent(4));
  for (auto _ : state) benchmark::DoNotOptimize(a.adjoint());
}
BENCHMARK(BM_Adjoint);

}  // namespace
