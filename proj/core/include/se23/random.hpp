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

#include <cstdint>
#include <random>

#include "se23/types.hpp"

namespace se23 {

/// Named random sub-streams. Every draw in the library comes from
/// make_rng(seed, stream, counter), so results depend only on the seed and on
/// the counter of the unit of work, never on scheduling.
enum class Stream : std::uint32_t {
  kNoise = 1,
  kBiasDraws = 2,
  kMonteCarlo = 3,
  kModelSampling = 4,
};

inline std::mt19937_64 make_rng(std::uint64_t seed, Stream stream, std::uint64_t counter = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(counter),
                    static_cast<std::uint32_t>(counter >> 32)};
  return std::mt19937_64(seq);
}

template <int N>
Eigen::Matrix<double, N, 1> standard_normal(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix<double, N, 1> out;
  for (int i = 0; i < N; ++i) out[i] = normal(rng);
  return out;
}

}  // namespace se23
