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

#include "se23/so3.hpp"
#include "se23/types.hpp"

namespace se23 {

/// Element (R, V, X) of SE_2(3).
///
/// The 5x5 embedding is
///
///     [ R  V  X ]
///     [ 0  1  0 ]
///     [ 0  0  1 ]
///
/// and group composition is the matrix product. The rotation block is stored
/// as-is; nothing here re-orthonormalizes it.
struct ExtendedPose {
  Rotation3 rot = Rotation3::Identity();
  Vec3 vel = Vec3::Zero();
  Vec3 pos = Vec3::Zero();

  static ExtendedPose Identity() { return {}; }

  /// Reads the R, V and X blocks of a 5x5 matrix. The bottom rows are ignored.
  static ExtendedPose FromMatrix(const Mat5& m);

  Mat5 matrix() const;

  ExtendedPose inverse() const;

  /// Ad_T acting on R^9: [[R, 0, 0], [V^ R, R, 0], [X^ R, 0, R]].
  Mat9 adjoint() const;

  ExtendedPose operator*(const ExtendedPose& rhs) const;
};

/// The xi^ operator: top-left block omega^, columns 4 and 5 carry nu and rho.
Mat5 hat(const Tangent9& xi);

/// Inverse of hat(). Only the first three rows are read.
Tangent9 vee(const Mat5& m);

/// Closed-form group exponential (exp(omega^), N(omega) nu, N(omega) rho).
ExtendedPose exp_map(const Tangent9& xi);

/// Group logarithm. Throws Error(kAngleNearPi) when the rotation angle is at
/// or beyond pi - kLogMargin.
Tangent9 log_map(const ExtendedPose& pose);

inline ExtendedPose compose(const ExtendedPose& a, const ExtendedPose& b) { return a * b; }
inline ExtendedPose inverse(const ExtendedPose& pose) { return pose.inverse(); }
inline Mat9 adjoint(const ExtendedPose& pose) { return pose.adjoint(); }

/// Frobenius distance between 5x5 embeddings.
double distance(const ExtendedPose& a, const ExtendedPose& b);

}  // namespace se23
