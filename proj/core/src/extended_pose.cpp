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

#include "se23/extended_pose.hpp"

#include <Eigen/LU>

namespace se23 {

ExtendedPose ExtendedPose::FromMatrix(const Mat5& m) {
  return {m.block<3, 3>(0, 0), m.block<3, 1>(0, 3), m.block<3, 1>(0, 4)};
}

Mat5 ExtendedPose::matrix() const {
  Mat5 m = Mat5::Identity();
  m.block<3, 3>(0, 0) = rot;
  m.block<3, 1>(0, 3) = vel;
  m.block<3, 1>(0, 4) = pos;
  return m;
}

ExtendedPose ExtendedPose::inverse() const {
  const Mat3 rt = rot.transpose();
  return {rt, -rt * vel, -rt * pos};
}

Mat9 ExtendedPose::adjoint() const {
  Mat9 ad = Mat9::Zero();
  ad.block<3, 3>(0, 0) = rot;
  ad.block<3, 3>(3, 0) = skew(vel) * rot;
  ad.block<3, 3>(3, 3) = rot;
  ad.block<3, 3>(6, 0) = skew(pos) * rot;
  ad.block<3, 3>(6, 6) = rot;
  return ad;
}

ExtendedPose ExtendedPose::operator*(const ExtendedPose& rhs) const {
  return {rot * rhs.rot, rot * rhs.vel + vel, rot * rhs.pos + pos};
}

Mat5 hat(const Tangent9& xi) {
  Mat5 m = Mat5::Zero();
  m.block<3, 3>(0, 0) = skew(omega_of(xi));
  m.block<3, 1>(0, 3) = nu_of(xi);
  m.block<3, 1>(0, 4) = rho_of(xi);
  return m;
}

Tangent9 vee(const Mat5& m) {
  return make_tangent(unskew(m.block<3, 3>(0, 0)), m.block<3, 1>(0, 3),
                      m.block<3, 1>(0, 4));
}

ExtendedPose exp_map(const Tangent9& xi) {
  const Vec3 omega = omega_of(xi);
  const Mat3 n = left_jacobian(omega);
  return {so3_exp(omega), n * nu_of(xi), n * rho_of(xi)};
}

Tangent9 log_map(const ExtendedPose& pose) {
  const Vec3 omega = so3_log(pose.rot);
  Eigen::Matrix<double, 3, 2> translation;
  translation << pose.vel, pose.pos;
  const Eigen::Matrix<double, 3, 2> coords =
      left_jacobian(omega).partialPivLu().solve(translation);
  return make_tangent(omega, coords.col(0), coords.col(1));
}

double distance(const ExtendedPose& a, const ExtendedPose& b) {
  return (a.matrix() - b.matrix()).norm();
}

}  // namespace se23
