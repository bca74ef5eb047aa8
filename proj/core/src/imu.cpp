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

#include "se23/imu.hpp"

#include "se23/error.hpp"

namespace se23 {

Mat5 rhs_flat(const ExtendedPose& pose, const ImuSample& u, const EarthModel& earth) {
  if (!earth.is_flat()) {
    throw Error(ErrorKind::kInvalidArgument, "rhs_flat requires a zero Earth rate");
  }
  Mat5 d = Mat5::Zero();
  d.block<3, 3>(0, 0) = pose.rot * skew(u.gyro);
  d.block<3, 1>(0, 3) = earth.gravity + pose.rot * u.accel;
  d.block<3, 1>(0, 4) = pose.vel;
  return d;
}

Mat5 rhs_earth(const ExtendedPose& pose, const ImuSample& u, const EarthModel& earth) {
  const Mat3 om = skew(earth.earth_rate);
  Mat5 d = Mat5::Zero();
  d.block<3, 3>(0, 0) = -om * pose.rot + pose.rot * skew(u.gyro);
  d.block<3, 1>(0, 3) = earth.gravity + pose.rot * u.accel - 2.0 * om * pose.vel -
                        om * (om * pose.pos);
  d.block<3, 1>(0, 4) = pose.vel;
  return d;
}

Mat5 velocity_term(const ExtendedPose& pose) {
  Mat5 f = Mat5::Zero();
  f.block<3, 1>(0, 4) = pose.vel;
  return f;
}

AffineEmbedding affine_embedding(const ImuSample& u, const EarthModel& earth, bool primed) {
  AffineEmbedding e;
  e.w.block<3, 1>(0, 3) = earth.gravity;
  if (primed) e.w.block<3, 3>(0, 0) = -skew(earth.earth_rate);
  e.u.block<3, 3>(0, 0) = skew(u.gyro);
  e.u.block<3, 1>(0, 3) = u.accel;
  return e;
}

double group_affine_residual(const PoseVectorField& g, const ExtendedPose& t1,
                             const ExtendedPose& t2) {
  const Mat5 m1 = t1.matrix();
  const Mat5 m2 = t2.matrix();
  const Mat5 lhs = g(t1 * t2);
  const Mat5 rhs = g(t1) * m2 + m1 * g(t2) - m1 * g(ExtendedPose::Identity()) * m2;
  return (lhs - rhs).norm();
}

}  // namespace se23
