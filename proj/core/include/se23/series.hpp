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

namespace se23 {

/// Truncated power series sum_{k < terms} A^k / k!.
///
/// Reference oracle for the closed-form exponentials. Deliberately naive: no
/// scaling and squaring, so keep ||A|| moderate.
template <typename Derived>
typename Derived::PlainObject series_expm(const Eigen::MatrixBase<Derived>& a,
                                          int terms = 30) {
  using Plain = typename Derived::PlainObject;
  Plain sum = Plain::Identity(a.rows(), a.cols());
  Plain term = Plain::Identity(a.rows(), a.cols());
  for (int k = 1; k < terms; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

}  // namespace se23
