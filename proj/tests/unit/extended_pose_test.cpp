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

#include <numbers>

#include "se23/error.hpp"
#include "se23/extended_pose.hpp"
#include "se23/series.hpp"
#include "test_util.hpp"

namespace se23 {
namespace {

using testing::random_pose;
using testing::random_tangent;
using testing::rng_for;

TEST(ExtendedPoseTest, MatrixLayout) {
  const ExtendedPose t{so3_exp(Vec3(0.1, 0.2, 0.3)), Vec3(1, 2, 3), Vec3(4, 5, 6)};
  const Mat5 m = t.matrix();
  EXPECT_EQ((m.block<3, 3>(0, 0)), (t.rot));
  EXPECT_EQ((m.block<3, 1>(0, 3)), (t.vel));
  EXPECT_EQ((m.block<3, 1>(0, 4)), (t.pos));
  Eigen::Matrix<double, 2, 5> bottom;
  bottom << 0, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  EXPECT_EQ((m.block<2, 5>(3, 0)), bottom);
  const ExtendedPose back = ExtendedPose::FromMatrix(m);
  EXPECT_EQ(back.rot, t.rot);
  EXPECT_EQ(back.vel, t.vel);
  EXPECT_EQ(back.pos, t.pos);
}

TEST(ExtendedPoseTest, CompositionMatchesMatrixProduct) {
  auto rng = rng_for(10);
  for (int i = 0; i < 50; ++i) {
    const ExtendedPose a = random_pose(rng);
    const ExtendedPose b = random_pose(rng);
    EXPECT_LT(((a * b).matrix() - a.matrix() * b.matrix()).norm(), 1e-12);
    EXPECT_LT(((a * a.inverse()).matrix() - Mat5::Identity()).norm(), 1e-12);
    EXPECT_LT((a.inverse().matrix() - a.matrix().inverse()).norm(), 1e-10);
  }
}

TEST(ExtendedPoseTest, CompositionIsAssociative) {
  auto rng = rng_for(11);
  const ExtendedPose a = random_pose(rng);
  const ExtendedPose b = random_pose(rng);
  const ExtendedPose c = random_pose(rng);
  EXPECT_LT(distance((a * b) * c, a * (b * c)), 1e-12);
}

TEST(ExtendedPoseTest, HatVeeRoundTrip) {
  auto rng = rng_for(12);
  const Tangent9 xi = random_tangent(rng, 3.0);
  EXPECT_EQ(vee(hat(xi)), xi);
  EXPECT_EQ((hat(xi).row(3)), (Eigen::Matrix<double, 1, 5>::Zero()));
  EXPECT_EQ((hat(xi).row(4)), (Eigen::Matrix<double, 1, 5>::Zero()));
}

TEST(ExtendedPoseTest, ExpMatchesPowerSeries) {
  auto rng = rng_for(13);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Tangent9 xi = random_tangent(rng, 5.0);
    worst = std::max(worst, (exp_map(xi).matrix() - series_expm(hat(xi), 60)).cwiseAbs().maxCoeff());
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(ExtendedPoseTest, ExpOfZeroIsIdentity) {
  EXPECT_EQ(exp_map(Tangent9::Zero()).matrix(), Mat5::Identity());
  EXPECT_EQ(log_map(ExtendedPose::Identity()), Tangent9::Zero());
}

TEST(ExtendedPoseTest, LogInvertsExp) {
  auto rng = rng_for(14);
  for (int i = 0; i < 1000; ++i) {
    Tangent9 xi = random_tangent(rng, 5.0);
    if (xi.head<3>().norm() > 3.0) xi.head<3>() *= 3.0 / xi.head<3>().norm();
    EXPECT_LT((log_map(exp_map(xi)) - xi).norm(), 1e-10);
  }
}

TEST(ExtendedPoseTest, ExpInvertsLog) {
  auto rng = rng_for(15);
  for (int i = 0; i < 500; ++i) {
    const ExtendedPose t = random_pose(rng, 10.0, 100.0);
    EXPECT_LT(distance(exp_map(log_map(t)), t), 1e-9);
  }
}

TEST(ExtendedPoseTest, PureTranslationExp) {
  Tangent9 xi;
  xi << 0, 0, 0, 1, 2, 3, -4, 5, 0.5;
  const ExtendedPose t = exp_map(xi);
  EXPECT_EQ(t.rot, Mat3::Identity());
  EXPECT_EQ(t.vel, Vec3(1, 2, 3));
  EXPECT_EQ(t.pos, Vec3(-4, 5, 0.5));
}

TEST(ExtendedPoseTest, LogNearPiThrows) {
  const ExtendedPose t{so3_exp(Vec3(std::numbers::pi, 0.0, 0.0)), Vec3::Ones(), Vec3::Ones()};
  EXPECT_THROW(log_map(t), Error);
}

TEST(ExtendedPoseTest, AdjointIdentity) {
  auto rng = rng_for(16);
  for (int i = 0; i < 1000; ++i) {
    const ExtendedPose t = exp_map(random_tangent(rng, 2.0));
    const Tangent9 xi = random_tangent(rng, 1.0);
    EXPECT_LT(distance(exp_map(t.adjoint() * xi), t * exp_map(xi) * t.inverse()), 1e-10);
    EXPECT_LT((hat(t.adjoint() * xi) - t.matrix() * hat(xi) * t.inverse().matrix()).norm(), 1e-12);
  }
}

TEST(ExtendedPoseTest, AdjointIsHomomorphism) {
  auto rng = rng_for(17);
  const ExtendedPose a = random_pose(rng);
  const ExtendedPose b = random_pose(rng);
  EXPECT_LT(((a * b).adjoint() - a.adjoint() * b.adjoint()).norm(), 1e-10);
  EXPECT_LT((a.inverse().adjoint() - a.adjoint().inverse()).norm(), 1e-9);
}

TEST(ExtendedPoseTest, DistanceIsFrobenius) {
  const ExtendedPose a;
  ExtendedPose b;
  b.pos = Vec3(3.0, 4.0, 0.0);
  EXPECT_DOUBLE_EQ(distance(a, b), 5.0);
  EXPECT_EQ(distance(a, a), 0.0);
}

}  // namespace
}  // namespace se23
