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

#include "se23/types.hpp"

namespace se23 {

/// Rotations are plain 3x3 matrices. They are never re-orthonormalized behind
/// the caller's back; use project_to_rotation() explicitly when needed.
using Rotation3 = Mat3;

/// Below this angle every trigonometric coefficient ratio switches to its
/// Taylor expansion.
inline constexpr double kSmallAngle = 1e-6;

/// Rotation angles at or above pi - kLogMargin have an ambiguous logarithm.
inline constexpr double kLogMargin = 1e-6;

Mat3 skew(const Vec3& v);
Vec3 unskew(const Mat3& m);

Rotation3 so3_exp(const Vec3& phi);

/// Throws Error(kAngleNearPi) when the rotation angle is >= pi - kLogMargin.
Vec3 so3_log(const Rotation3& rot);

double rotation_angle(const Rotation3& rot);

/// Left Jacobian N(phi) = sum_n (phi^)^n / (n+1)!. Maps the translation part
/// of exponential coordinates to the translation of the group element.
Mat3 left_jacobian(const Vec3& phi);

/// Right Jacobian D(phi) = N(-phi), defined by
/// exp((phi + u)^) = exp(phi^) (I + (D(phi) u)^ + o(u)).
Mat3 right_jacobian(const Vec3& phi);

/// M(phi) = sum_n (phi^)^n / (n+2)!: the double integral of exp(s phi^),
/// i.e. the position block of a constant-input step.
Mat3 second_order_jacobian(const Vec3& phi);

/// d/dphi [N(phi) a].
Mat3 left_jacobian_apply_derivative(const Vec3& phi, const Vec3& a);

/// d/dphi [M(phi) a].
Mat3 second_order_apply_derivative(const Vec3& phi, const Vec3& a);

/// ||R^T R - I||_F.
double orthonormality_error(const Mat3& rot);

/// Nearest rotation in the Frobenius sense (SVD polar factor).
Rotation3 project_to_rotation(const Mat3& m);

namespace so3_detail {

// Both branches of N(phi), exposed so their agreement at the switch-over
// angle can be checked directly.
Mat3 left_jacobian_closed_form(const Vec3& phi);
Mat3 left_jacobian_taylor(const Vec3& phi);

}  // namespace so3_detail

}  // namespace se23
