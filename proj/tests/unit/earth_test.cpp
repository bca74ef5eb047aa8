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

#include <unsupported/Eigen/MatrixFunctions>

#include "se23/earth.hpp"
#include "se23/error.hpp"
#include "se23/integrator.hpp"
#include "se23/preintegration.hpp"
#include "test_util.hpp"

namespace se23 {
namespace {

using testing::random_pose;
using testing::random_stream;
using testing::rng_for;

// Closed-form gammas from the exponential of the augmented linear system
// d/dt (x, v, 1) = [[-W^, I, 0], [0, -W^, g], [0, 0, 0]] (x, v, 1).
GammaEarth matrix_exponential_gammas(const EarthModel& earth, double t) {
  Eigen::Matrix<double, 7, 7> a = Eigen::Matrix<double, 7, 7>::Zero();
  a.block<3, 3>(0, 0) = -skew(earth.earth_rate);
  a.block<3, 3>(0, 3) = Mat3::Identity();
  a.block<3, 3>(3, 3) = -skew(earth.earth_rate);
  a.block<3, 1>(3, 6) = earth.gravity;
  const Eigen::Matrix<double, 7, 7> e = (a * t).exp();
  GammaEarth g;
  g.gamma_r = (-skew(earth.earth_rate) * t).exp();
  g.gamma_x = e.block<3, 1>(0, 6);
  g.gamma_v = e.block<3, 1>(3, 6);
  g.t = t;
  return g;
}

TEST(EarthTest, PrimedRoundTrip) {
  auto rng = rng_for(50);
  const EarthModel earth = EarthModel::Rotating(Vec3(0.3, 0.1, 1.0), 0.2);
  const ExtendedPose t = random_pose(rng);
  const ExtendedPose primed = to_primed(t, earth);
  EXPECT_EQ(primed.rot, t.rot);
  EXPECT_EQ(primed.pos, t.pos);
  EXPECT_LT((primed.vel - (t.vel + earth.earth_rate.cross(t.pos))).norm(), 1e-15);
  EXPECT_LT(distance(from_primed(primed, earth), t), 1e-14);
}

TEST(EarthTest, PrimedVelocityExample) {
  EarthModel earth;
  earth.earth_rate = Vec3(0.0, 0.0, 1.0);
  ExtendedPose t;
  t.pos = Vec3(2.0, 0.0, 0.0);
  EXPECT_LT((to_primed(t, earth).vel - Vec3(0.0, 2.0, 0.0)).norm(), 1e-15);
}

TEST(EarthTest, GammasMatchMatrixExponential) {
  const EarthModel earth = EarthModel::Rotating(Vec3(0.2, -0.4, 1.0), 0.05);
  for (const double t : {0.5, 3.0, 20.0}) {
    const GammaEarth num = integrate_gamma(earth, t, 0.01);
    const GammaEarth ref = matrix_exponential_gammas(earth, t);
    EXPECT_LT((num.gamma_r - ref.gamma_r).norm(), 1e-12) << t;
    EXPECT_LT((num.gamma_v - ref.gamma_v).norm(), 1e-9 * ref.gamma_v.norm()) << t;
    EXPECT_LT((num.gamma_x - ref.gamma_x).norm(), 1e-9 * ref.gamma_x.norm()) << t;
  }
}

TEST(EarthTest, ZeroRateGivesFlatGammas) {
  const EarthModel flat = EarthModel::Flat();
  const GammaEarth g = integrate_gamma(flat, 100.0, 0.01);
  const ExtendedPose ref = gamma_flat(100.0, flat);
  EXPECT_EQ(g.gamma_r, Mat3::Identity());
  EXPECT_LT((g.gamma_v - ref.vel).norm(), 1e-10 * ref.vel.norm());
  EXPECT_LT((g.gamma_x - ref.pos).norm(), 1e-10 * ref.pos.norm());
}

TEST(EarthTest, ZeroGravityLeavesOnlyRotation) {
  const EarthModel earth = EarthModel::Rotating(Vec3::UnitZ(), 0.1, Vec3::Zero());
  const GammaEarth g = integrate_gamma(earth, 10.0, 0.1);
  EXPECT_EQ(g.gamma_v, Vec3::Zero());
  EXPECT_EQ(g.gamma_x, Vec3::Zero());
  EXPECT_LT((g.gamma_r - so3_exp(Vec3(0.0, 0.0, -1.0))).norm(), 1e-13);
}

TEST(EarthTest, RefinementConverges) {
  const EarthModel earth = EarthModel::Rotating(Vec3(1.0, 0.0, 1.0));
  const GammaEarth coarse = integrate_gamma(earth, 60.0, 0.1);
  const GammaEarth fine = integrate_gamma(earth, 60.0, 0.01);
  EXPECT_LT((coarse.gamma_x - fine.gamma_x).norm(), 1e-9 * fine.gamma_x.norm());
  EXPECT_LT((coarse.gamma_v - fine.gamma_v).norm(), 1e-9 * fine.gamma_v.norm());
}

TEST(EarthTest, GammaArgumentChecks) {
  const EarthModel earth = EarthModel::Rotating(Vec3::UnitZ());
  const GammaEarth zero = integrate_gamma(earth, 0.0, 0.1);
  EXPECT_EQ(zero.t, 0.0);
  EXPECT_EQ(zero.gamma_r, Mat3::Identity());
  EXPECT_THROW(integrate_gamma(earth, -1.0, 0.1), Error);
  EXPECT_THROW(integrate_gamma(earth, 1.0, 0.0), Error);
  EXPECT_THROW(integrate_gamma(earth, 1.0, 2.0), Error);
}

TEST(EarthTest, EmptyFactorReturnsInitialState) {
  auto rng = rng_for(51);
  const EarthModel earth = EarthModel::Rotating(Vec3(0.0, 0.5, 1.0), 0.1);
  const ExtendedPose t0 = random_pose(rng);
  EXPECT_LT(distance(apply_earth(PreintDelta{}, integrate_gamma(earth, 0.0, 0.1), t0, earth), t0),
            1e-14);
}

TEST(EarthTest, DurationMismatchThrows) {
  const EarthModel earth = EarthModel::Rotating(Vec3::UnitZ());
  ImuSample u;
  u.dt = 0.5;
  const PreintDelta d = absorb_sample(PreintDelta{}, u, StepMode::kExactStep);
  try {
    apply_earth(d, integrate_gamma(earth, 1.0, 0.1), ExtendedPose{}, earth);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDurationMismatch);
  }
}

class ReconstructionTest : public ::testing::TestWithParam<double> {};

// Rotating-Earth reconstruction from a body-only factor against a direct RK4
// solution of the unprimed dynamics.
TEST_P(ReconstructionTest, MatchesDirectIntegration) {
  auto rng = rng_for(52);
  const EarthModel earth = EarthModel::Rotating(Vec3(0.4, -0.2, 1.0), GetParam());
  const auto samples = random_stream(rng, 500, 0.01);
  const ExtendedPose t0 = random_pose(rng);
  PreintDelta d;
  for (const ImuSample& u : samples) d = absorb_sample(d, u, StepMode::kExactStep);

  const ExtendedPose reconstructed = apply_earth(d, integrate_gamma(earth, d.duration, 0.001), t0,
                                                 earth);
  const ExtendedPose direct = rk4_integrate(earth_dynamics(earth), t0, samples, 20).pose;
  EXPECT_LT((reconstructed.pos - direct.pos).norm(), 1e-7);
  EXPECT_LT((reconstructed.vel - direct.vel).norm(), 1e-7);
  EXPECT_LT((reconstructed.rot - direct.rot).norm(), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Rates, ReconstructionTest,
                         ::testing::Values(kEarthRotationRate, 0.01, 0.3));

TEST(EarthTest, InitialStateEntersThroughGammas) {
  // Changing T0 changes the output only through the closed-form terms, never
  // through the factor.
  auto rng = rng_for(53);
  const EarthModel earth = EarthModel::Rotating(Vec3(0.0, 0.0, 1.0), 0.05);
  const auto samples = random_stream(rng, 100, 0.01);
  PreintDelta d;
  for (const ImuSample& u : samples) d = absorb_sample(d, u, StepMode::kExactStep);
  const GammaEarth g = integrate_gamma(earth, d.duration, 0.01);
  for (int i = 0; i < 5; ++i) {
    const ExtendedPose t0 = random_pose(rng);
    const ExtendedPose direct = rk4_integrate(earth_dynamics(earth), t0, samples, 10).pose;
    EXPECT_LT(distance(apply_earth(d, g, t0, earth), direct), 1e-8);
  }
}

TEST(EarthTest, SmallRateApproachesFlat) {
  auto rng = rng_for(54);
  const auto samples = random_stream(rng, 100, 0.01);
  const ExtendedPose t0 = random_pose(rng);
  PreintDelta d;
  for (const ImuSample& u : samples) d = absorb_sample(d, u, StepMode::kExactStep);
  const ExtendedPose flat = apply_flat(d, t0, EarthModel::Flat());
  double previous = 1.0;
  for (const double rate : {1e-3, 1e-5, 1e-7}) {
    const EarthModel earth = EarthModel::Rotating(Vec3::UnitZ(), rate);
    const double gap = distance(apply_earth(d, integrate_gamma(earth, 1.0, 0.01), t0, earth), flat);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
  EXPECT_LT(previous, 1e-5);
}

}  // namespace
}  // namespace se23
