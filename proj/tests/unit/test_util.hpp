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

#include <random>

#include "se23/extended_pose.hpp"
#include "se23/imu.hpp"
#include "se23/random.hpp"

namespace se23::testing {

inline std::mt19937_64 rng_for(std::uint64_t counter) {
  return make_rng(424242, Stream::kModelSampling, counter);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_vec3(std::mt19937_64& rng, double scale = 1.0) {
  return scale * standard_normal<3>(rng);
}

inline Vec3 random_direction(std::mt19937_64& rng) { return standard_normal<3>(rng).normalized(); }

inline Tangent9 random_tangent(std::mt19937_64& rng, double max_norm) {
  return standard_normal<9>(rng).normalized() * uniform(rng, 0.0, max_norm);
}

inline ExtendedPose random_pose(std::mt19937_64& rng, double vel_scale = 3.0,
                                double pos_scale = 10.0) {
  return {so3_exp(random_direction(rng) * uniform(rng, 0.0, 3.0)), random_vec3(rng, vel_scale),
          random_vec3(rng, pos_scale)};
}

inline ImuSample random_sample(std::mt19937_64& rng, double dt) {
  return {random_vec3(rng), random_vec3(rng, 3.0) + Vec3(0.0, 0.0, kStandardGravity), dt};
}

inline std::vector<ImuSample> random_stream(std::mt19937_64& rng, int n, double dt) {
  std::vector<ImuSample> out;
  for (int i = 0; i < n; ++i) out.push_back(random_sample(rng, dt));
  return out;
}

/// Central-difference Jacobian of f: R^n -> R^m at x.
template <int M, int N, typename F>
Eigen::Matrix<double, M, N> numeric_jacobian(F&& f, const Eigen::Matrix<double, N, 1>& x,
                                             double h) {
  Eigen::Matrix<double, M, N> j;
  for (int i = 0; i < N; ++i) {
    Eigen::Matrix<double, N, 1> dx = Eigen::Matrix<double, N, 1>::Zero();
    dx[i] = h;
    j.col(i) = (f(x + dx) - f(x - dx)) / (2.0 * h);
  }
  return j;
}

}  // namespace se23::testing
