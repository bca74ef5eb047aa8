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

#include <gtest/gtest.h>

#include <cmath>
#include <ostream>
#include <string>

#include "se23/error.hpp"
#include "se23/integrator.hpp"
#include "se23/preintegration.hpp"
#include "test_util.hpp"

namespace se23 {

void PrintTo(StepMode mode, std::ostream* os) { *os << to_string(mode); }

namespace {

using testing::numeric_jacobian;
using testing::random_pose;
using testing::random_sample;
using testing::random_stream;
using testing::random_tangent;
using testing::rng_for;

PreintDelta accumulate(std::span<const ImuSample> samples, StepMode mode) {
  PreintDelta d;
  for (const ImuSample& u : samples) d = absorb_sample(d, u, mode);
  return d;
}

TEST(PreintegrationTest, StepModeNames) {
  EXPECT_EQ(step_mode_from_string("exact_step"), StepMode::kExactStep);
  EXPECT_EQ(step_mode_from_string("first_order"), StepMode::kFirstOrder);
  EXPECT_EQ(to_string(StepMode::kExactStep), "exact_step");
  EXPECT_THROW(step_mode_from_string("euler"), Error);
}

TEST(PreintegrationTest, PhiIsAutomorphism) {
  auto rng = rng_for(40);
  for (int i = 0; i < 50; ++i) {
    const ExtendedPose a = random_pose(rng);
    const ExtendedPose b = random_pose(rng);
    const double t = testing::uniform(rng, 0.0, 2.0);
    EXPECT_LT(distance(phi_map(a * b, t), phi_map(a, t) * phi_map(b, t)), 1e-11);
    EXPECT_LT(distance(phi_map(a.inverse(), t), phi_map(a, t).inverse()), 1e-11);
  }
}

TEST(PreintegrationTest, FMatrixLinearizesPhi) {
  auto rng = rng_for(41);
  for (int i = 0; i < 50; ++i) {
    const Tangent9 xi = random_tangent(rng, 2.0);
    const double t = testing::uniform(rng, 0.0, 2.0);
    EXPECT_LT(distance(phi_map(exp_map(xi), t), exp_map(f_matrix(t) * xi)), 1e-12);
  }
}

TEST(PreintegrationTest, GammaFlatRejectsRotatingEarth) {
  EXPECT_THROW(gamma_flat(1.0, EarthModel::Rotating(Vec3::UnitZ())), Error);
  const ExtendedPose g = gamma_flat(2.0, EarthModel::Flat());
  EXPECT_NEAR(g.vel.z(), -2.0 * kStandardGravity, 1e-15);
  EXPECT_NEAR(g.pos.z(), -2.0 * kStandardGravity, 1e-15);
}

TEST(PreintegrationTest, ExactStepSolvesDeltaOde) {
  auto rng = rng_for(42);
  for (int i = 0; i < 20; ++i) {
    ImuSample u = random_sample(rng, testing::uniform(rng, 0.01, 0.5));
    const std::vector<ImuSample> one{u};
    const ExtendedPose reference =
        rk4_integrate(delta_dynamics(), ExtendedPose{}, one, 400).raw;
    EXPECT_LT(distance(step_factor(u, StepMode::kExactStep), reference), 1e-10);
  }
}

TEST(PreintegrationTest, ZeroRateStepsAgree) {
  ImuSample u;
  u.accel = Vec3(1.0, -2.0, 3.0);
  u.dt = 0.1;
  EXPECT_LT(distance(step_factor(u, StepMode::kExactStep), step_factor(u, StepMode::kFirstOrder)),
            1e-15);
}

TEST(PreintegrationTest, ApplyFlatReproducesDirectIntegration) {
  auto rng = rng_for(43);
  const EarthModel flat = EarthModel::Flat();
  const auto samples = random_stream(rng, 200, 0.005);
  const ExtendedPose t0 = random_pose(rng);
  const PreintDelta delta = accumulate(samples, StepMode::kExactStep);
  EXPECT_NEAR(delta.duration, 1.0, 1e-12);

  ExtendedPose stepped = t0;
  for (const ImuSample& u : samples) stepped = propagate_step(stepped, u, StepMode::kExactStep, flat);
  EXPECT_LT(distance(apply_flat(delta, t0, flat), stepped), 1e-11);

  const ExtendedPose rk = rk4_integrate(flat_dynamics(flat), t0, samples, 10).pose;
  EXPECT_LT(distance(apply_flat(delta, t0, flat), rk), 1e-8);
}

TEST(PreintegrationTest, FirstOrderConvergesLinearly) {
  ImuSample u;
  u.gyro = Vec3(0.3, -0.2, 0.5);
  u.accel = Vec3(1.0, 2.0, 9.0);
  const double duration = 1.0;
  auto gap = [&](int n) {
    u.dt = duration / n;
    const std::vector<ImuSample> samples(static_cast<std::size_t>(n), u);
    return distance(upsilon_of(accumulate(samples, StepMode::kFirstOrder)),
                    upsilon_of(accumulate(samples, StepMode::kExactStep)));
  };
  const double e1 = gap(50);
  const double e2 = gap(100);
  EXPECT_GT(e1, 1e-4);
  EXPECT_NEAR(e1 / e2, 2.0, 0.1);
}

TEST(PreintegrationTest, AbsorbRejectsBadInput) {
  ImuSample u;
  u.dt = 0.0;
  EXPECT_THROW(absorb_sample(PreintDelta{}, u, StepMode::kExactStep), Error);
  u.dt = 0.01;
  const PreintDelta d = absorb_sample(PreintDelta{}, u, StepMode::kExactStep);
  EXPECT_THROW(absorb_sample(d, u, StepMode::kFirstOrder), Error);
}

TEST(PreintegrationTest, CorruptAndCorrectAreInverse) {
  ImuSample truth;
  truth.gyro = Vec3(0.1, 0.2, 0.3);
  truth.accel = Vec3(0.0, 0.0, 9.81);
  truth.dt = 0.01;
  const BiasState bias{Vec3(0.01, -0.02, 0.03), Vec3(0.1, 0.2, -0.3)};
  auto rng = rng_for(44);
  const ImuSample measured = corrupt_sample(truth, NoiseDensities{}, bias, rng);
  EXPECT_LT((measured.gyro - (truth.gyro - bias.gyro)).norm(), 1e-15);
  EXPECT_LT((measured.accel - (truth.accel - bias.accel)).norm(), 1e-15);
  const ImuSample back = bias_corrected(measured, bias);
  EXPECT_LT((back.gyro - truth.gyro).norm(), 1e-15);
  EXPECT_LT((back.accel - truth.accel).norm(), 1e-14);
  EXPECT_EQ(back.dt, truth.dt);
}

TEST(PreintegrationTest, CorruptNoiseHasRequestedSpread) {
  ImuSample truth;
  truth.dt = 0.01;
  NoiseDensities noise;
  noise.gyro_std = Vec3(0.1, 0.2, 0.3);
  noise.accel_std = Vec3(1.0, 2.0, 3.0);
  auto rng = rng_for(45);
  Vec6 sum_sq = Vec6::Zero();
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const ImuSample m = corrupt_sample(truth, noise, BiasState{}, rng);
    Vec6 s;
    s << m.gyro, m.accel;
    sum_sq += s.cwiseAbs2();
  }
  Vec6 expected;
  expected << noise.gyro_std, noise.accel_std;
  const Vec6 ratio = (sum_sq / n).cwiseSqrt().cwiseQuotient(expected);
  EXPECT_LT((ratio - Vec6::Ones()).cwiseAbs().maxCoeff(), 0.03);
}

class StepDerivativeTest : public ::testing::TestWithParam<StepMode> {};

TEST_P(StepDerivativeTest, MatchesFiniteDifferences) {
  auto rng = rng_for(46);
  for (int i = 0; i < 10; ++i) {
    const ImuSample u = random_sample(rng, testing::uniform(rng, 0.01, 0.3));
    const ExtendedPose base = step_factor(u, GetParam());
    auto perturbed = [&](const Vec6& b) {
      return step_factor({u.gyro + b.head<3>(), u.accel + b.tail<3>(), u.dt}, GetParam());
    };
    const auto rot = numeric_jacobian<3, 6>(
        [&](const Vec6& b) -> Vec3 { return so3_log(base.rot.transpose() * perturbed(b).rot); },
        Vec6::Zero().eval(), 1e-6);
    const auto vel = numeric_jacobian<3, 6>(
        [&](const Vec6& b) -> Vec3 { return perturbed(b).vel; }, Vec6::Zero().eval(), 1e-6);
    const auto pos = numeric_jacobian<3, 6>(
        [&](const Vec6& b) -> Vec3 { return perturbed(b).pos; }, Vec6::Zero().eval(), 1e-6);

    const StepFactorDerivative d = step_factor_bias_derivative(u, GetParam());
    EXPECT_LT((rot.leftCols<3>() - d.rot_gyro).norm(), 1e-8);
    EXPECT_LT(rot.rightCols<3>().norm(), 1e-12);
    EXPECT_LT((vel - d.vel).norm(), 1e-8);
    EXPECT_LT((pos - d.pos).norm(), 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, StepDerivativeTest,
                         ::testing::Values(StepMode::kExactStep, StepMode::kFirstOrder),
                         [](const ::testing::TestParamInfo<StepMode>& info) {
                           return std::string(to_string(info.param));
                         });

}  // namespace
}  // namespace se23
