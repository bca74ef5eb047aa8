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

#include "se23/so3.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "se23/error.hpp"

namespace se23 {
namespace {

// (t - sin t) / t^3, (t^2 / 2 + cos t - 1) / t^4 and all derivative
// coefficients cancel far earlier than sin(t) / t, hence a wider Taylor window.
constexpr double kDerivativeTaylorAngle = 0.05;

struct Coefficients {
  double sinc;  // sin(t) / t
  double a;     // (1 - cos t) / t^2
  double b;     // (t - sin t) / t^3
  double c;     // (t^2 / 2 + cos t - 1) / t^4
};

Coefficients taylor_coefficients(double t2) {
  const double t4 = t2 * t2;
  const double t6 = t4 * t2;
  return {1.0 - t2 / 6.0 + t4 / 120.0 - t6 / 5040.0,
          0.5 - t2 / 24.0 + t4 / 720.0 - t6 / 40320.0,
          1.0 / 6.0 - t2 / 120.0 + t4 / 5040.0 - t6 / 362880.0,
          1.0 / 24.0 - t2 / 720.0 + t4 / 40320.0 - t6 / 3628800.0};
}

Coefficients closed_coefficients(double t) {
  const double t2 = t * t;
  const double s = std::sin(t);
  const double half = std::sin(0.5 * t);
  const double one_minus_cos = 2.0 * half * half;
  return {s / t, one_minus_cos / t2, (t - s) / (t2 * t),
          (0.5 * t2 - one_minus_cos) / (t2 * t2)};
}

Coefficients coefficients(double t) {
  if (t < kSmallAngle) return taylor_coefficients(t * t);
  Coefficients k = closed_coefficients(t);
  if (t < kDerivativeTaylorAngle) {
    const Coefficients series = taylor_coefficients(t * t);
    k.b = series.b;
    k.c = series.c;
  }
  return k;
}

// a'(t)/t, b'(t)/t, c'(t)/t.
struct DerivativeCoefficients {
  double a;
  double b;
  double c;
};

DerivativeCoefficients derivative_coefficients(double t) {
  const double t2 = t * t;
  if (t < kDerivativeTaylorAngle) {
    const double t4 = t2 * t2;
    return {-1.0 / 12.0 + t2 / 180.0 - t4 / 6720.0,
            -1.0 / 60.0 + t2 / 1260.0 - t4 / 60480.0,
            -1.0 / 360.0 + t2 / 10080.0 - t4 / 604800.0};
  }
  const double s = std::sin(t);
  const double half = std::sin(0.5 * t);
  const double one_minus_cos = 2.0 * half * half;
  const double t4 = t2 * t2;
  return {(t * s - 2.0 * one_minus_cos) / t4,
          (t * one_minus_cos - 3.0 * (t - s)) / (t4 * t),
          (t * (t - s) - 4.0 * (0.5 * t2 - one_minus_cos)) / (t4 * t2)};
}

// d/dphi of [alpha(|phi|) phi^ a + beta(|phi|) phi^ phi^ a] where dalpha and
// dbeta are alpha'(t)/t and beta'(t)/t.
Mat3 quadratic_form_derivative(const Vec3& phi, const Vec3& a, double alpha,
                               double beta, double dalpha, double dbeta) {
  const Vec3 phi_a = phi.cross(a);
  const Vec3 phi_phi_a = phi.cross(phi_a);
  Mat3 out = -alpha * skew(a) + dalpha * phi_a * phi.transpose();
  out += beta * (phi.dot(a) * Mat3::Identity() + phi * a.transpose() -
                 2.0 * a * phi.transpose());
  out += dbeta * phi_phi_a * phi.transpose();
  return out;
}

}  // namespace

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

Vec3 unskew(const Mat3& m) { return Vec3(m(2, 1), m(0, 2), m(1, 0)); }

Rotation3 so3_exp(const Vec3& phi) {
  const Coefficients k = coefficients(phi.norm());
  const Mat3 w = skew(phi);
  return Mat3::Identity() + k.sinc * w + k.a * w * w;
}

double rotation_angle(const Rotation3& rot) {
  const Vec3 v = 0.5 * unskew(rot - rot.transpose());
  const double c = 0.5 * (rot.trace() - 1.0);
  return std::atan2(v.norm(), c);
}

Vec3 so3_log(const Rotation3& rot) {
  const Vec3 v = 0.5 * unskew(rot - rot.transpose());
  const double c = 0.5 * (rot.trace() - 1.0);
  const double s = v.norm();
  const double angle = std::atan2(s, c);
  if (angle >= std::numbers::pi - kLogMargin) {
    throw Error(ErrorKind::kAngleNearPi,
                "rotation angle " + std::to_string(angle) + " too close to pi");
  }
  if (c > 0.0) {
    if (angle < kSmallAngle) return v * (1.0 + angle * angle / 6.0);
    return v * (angle / s);
  }
  // Beyond pi/2 the antisymmetric part loses precision; recover the axis
  // from the symmetric part (1 - cos) n n^T instead.
  const Mat3 sym = 0.5 * (rot + rot.transpose()) - c * Mat3::Identity();
  Eigen::Index i = 0;
  sym.diagonal().maxCoeff(&i);
  Vec3 axis = sym.col(i) / std::sqrt(sym(i, i) * (1.0 - c));
  if (axis.dot(v) < 0.0) axis = -axis;
  return angle * axis;
}

Mat3 left_jacobian(const Vec3& phi) {
  const Coefficients k = coefficients(phi.norm());
  const Mat3 w = skew(phi);
  return Mat3::Identity() + k.a * w + k.b * w * w;
}

Mat3 right_jacobian(const Vec3& phi) { return left_jacobian(-phi); }

Mat3 second_order_jacobian(const Vec3& phi) {
  const Coefficients k = coefficients(phi.norm());
  const Mat3 w = skew(phi);
  return 0.5 * Mat3::Identity() + k.b * w + k.c * w * w;
}

Mat3 left_jacobian_apply_derivative(const Vec3& phi, const Vec3& a) {
  const double t = phi.norm();
  const Coefficients k = t < kDerivativeTaylorAngle
                             ? taylor_coefficients(t * t)
                             : closed_coefficients(t);
  const DerivativeCoefficients d = derivative_coefficients(t);
  return quadratic_form_derivative(phi, a, k.a, k.b, d.a, d.b);
}

Mat3 second_order_apply_derivative(const Vec3& phi, const Vec3& a) {
  const double t = phi.norm();
  const Coefficients k = t < kDerivativeTaylorAngle
                             ? taylor_coefficients(t * t)
                             : closed_coefficients(t);
  const DerivativeCoefficients d = derivative_coefficients(t);
  return quadratic_form_derivative(phi, a, k.b, k.c, d.b, d.c);
}

double orthonormality_error(const Mat3& rot) {
  return (rot.transpose() * rot - Mat3::Identity()).norm();
}

Rotation3 project_to_rotation(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU();
  const Mat3 v = svd.matrixV();
  if ((u * v.transpose()).determinant() < 0.0) u.col(2) *= -1.0;
  return u * v.transpose();
}

namespace so3_detail {

Mat3 left_jacobian_closed_form(const Vec3& phi) {
  const Coefficients k = closed_coefficients(phi.norm());
  const Mat3 w = skew(phi);
  return Mat3::Identity() + k.a * w + k.b * w * w;
}

Mat3 left_jacobian_taylor(const Vec3& phi) {
  const Coefficients k = taylor_coefficients(phi.squaredNorm());
  const Mat3 w = skew(phi);
  return Mat3::Identity() + k.a * w + k.b * w * w;
}

}  // namespace so3_detail
}  // namespace se23
