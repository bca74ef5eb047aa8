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

#include "se23/harness/config.hpp"

namespace se23::harness {

/// Straight line at 1 m/s for 1 s, dt = 0.01, gyro-dominated noise.
Scenario banana_scenario();

/// One second on the documented helix with small noise (gyro 1e-3 rad/s,
/// accel 1e-2 m/s^2 per sample).
Scenario consistency_scenario();

/// 120 s on the documented helix with low-cost bias magnitudes (1 deg/s,
/// 100 mg) and factor lengths 1, 10 and 60 s.
Scenario lowcost_scenario();

/// Helix radius 300 m at 10 m/s, climbing 0.5 m/s with a 5 m altitude
/// oscillation at 0.2 rad/s and a 0.1 rad bank.
TrajectorySpec documented_helix();

}  // namespace se23::harness
