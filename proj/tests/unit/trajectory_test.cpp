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

#include "se23/error.hpp"
#include "se23/harness/presets.hpp"
#include "se23/harness/trajectory.hpp"
#include "se23/integrator.hpp"
#include "se23/preintegration.hpp"

namespace se23::harness {
namespace {

TEST(TrajectoryTest, KindNames) {
  EXPECT_EQ(trajectory_kind_from_string("circle"), TrajectoryKind::kCircle);
  EXPECT_EQ(to_string(TrajectoryKind::kFigure3d), "figure3d");
  EXPECT_THROW(trajectory_kind_from_string("spiral"), Error);
}

TEST(TrajectoryTest, StraightLineMeasuresOnlyGravity) {
  TrajectorySpec spec;
  spec.speed = 2.0;
  spec.initial_heading = 0.7;
  const EarthModel flat = EarthModel::Flat();
  const ImuLog log = inverse_dynamics(spec, flat, 1.0, 0.1);
  ASSERT_EQ(log.samples.size(), 10u);
  ASSERT_EQ(log.truth.size(), 11u);
  for (std::size_t i = 0; i < log.samples.size(); ++i) {
    const ImuSample& u = log.samples[i];
    EXPECT_LT(u.gyro.norm(), 1e-15);
    EXPECT_LT((u.accel - (-log.truth[i].rot.transpose() * flat.gravity)).norm(), 1e-12);
  }
  EXPECT_NEAR((log.truth.back().pos - log.truth.front().pos).norm(), 2.0, 1e-12);
}

TEST(TrajectoryTest, CircleHasCentripetalAcceleration) {
  TrajectorySpec spec;
  spec.kind = TrajectoryKind::kCircle;
  spec.speed = 5.0;
  spec.radius = 20.0;
  for (const double t : {0.0, 1.3, 7.0}) {
    const KinematicState s = evaluate(spec, t);
    EXPECT_NEAR(s.acceleration.norm(), 25.0 / 20.0, 1e-9);
    EXPECT_NEAR(s.acceleration.dot(s.pose.vel), 0.0, 1e-9);
    EXPECT_NEAR(s.pose.vel.norm(), 5.0, 1e-12);
    EXPECT_NEAR(s.body_rate.norm(), 5.0 / 20.0, 1e-12);
  }
}

TEST(TrajectoryTest, EvaluateIsSelfConsistent) {
  const TrajectorySpec spec = documented_helix();
  const double h = 1e-5;
  for (const double t : {0.5, 3.0, 40.0}) {
    const KinematicState s = evaluate(spec, t);
    const KinematicState a = evaluate(spec, t - h);
    const KinematicState b = evaluate(spec, t + h);
    EXPECT_LT(((b.pose.pos - a.pose.pos) / (2 * h) - s.pose.vel).norm(), 1e-6);
    EXPECT_LT(((b.pose.vel - a.pose.vel) / (2 * h) - s.acceleration).norm(), 1e-6);
    const Mat3 rdot = (b.pose.rot - a.pose.rot) / (2 * h);
    EXPECT_LT((unskew(s.pose.rot.transpose() * rdot) - s.body_rate).norm(), 1e-6);
  }
}

TEST(TrajectoryTest, FlatRoundTrip) {
  const EarthModel flat = EarthModel::Flat();
  const ImuLog log = inverse_dynamics(documented_helix(), flat, 60.0, 0.01);
  const ExtendedPose integrated =
      rk4_integrate(flat_dynamics(flat), log.truth.front(), log.samples, 1).pose;
  EXPECT_LT((integrated.pos - log.truth.back().pos).norm(), 1e-4);
  EXPECT_LT((integrated.rot - log.truth.back().rot).norm(), 1e-6);
}

TEST(TrajectoryTest, EarthRoundTrip) {
  const EarthModel earth = EarthModel::Rotating(Vec3(0.0, 0.7, 0.7));
  const ImuLog log = inverse_dynamics(documented_helix(), earth, 10.0, 0.01);
  const ExtendedPose integrated =
      rk4_integrate(earth_dynamics(earth), log.truth.front(), log.samples, 1).pose;
  EXPECT_LT((integrated.pos - log.truth.back().pos).norm(), 1e-5);
}

TEST(TrajectoryTest, StepCount) {
  EXPECT_EQ(step_count(1.0, 0.01), 100u);
  EXPECT_EQ(step_count(120.0, 0.01), 12000u);
  EXPECT_THROW(step_count(1.0, 0.3), Error);
  EXPECT_THROW(step_count(1.0, 0.0), Error);
}

}  // namespace
}  // namespace se23::harness
