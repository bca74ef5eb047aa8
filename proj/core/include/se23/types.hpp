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

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace se23 {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat9 = Eigen::Matrix<double, 9, 9>;
using Mat96 = Eigen::Matrix<double, 9, 6>;
using Mat36 = Eigen::Matrix<double, 3, 6>;

/// Exponential coordinates (omega, nu, rho) of an extended pose perturbation.
/// Rows 0-2 rotate (rad), rows 3-5 act on velocity (m/s), rows 6-8 on
/// position (m).
using Tangent9 = Vec9;

inline auto omega_of(const Tangent9& xi) { return xi.segment<3>(0); }
inline auto nu_of(const Tangent9& xi) { return xi.segment<3>(3); }
inline auto rho_of(const Tangent9& xi) { return xi.segment<3>(6); }

inline Tangent9 make_tangent(const Vec3& omega, const Vec3& nu, const Vec3& rho) {
  Tangent9 xi;
  xi << omega, nu, rho;
  return xi;
}

}  // namespace se23
