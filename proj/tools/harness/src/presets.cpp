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

#include "se23/harness/presets.hpp"

namespace se23::harness {

TrajectorySpec documented_helix() {
  TrajectorySpec t;
  t.kind = TrajectoryKind::kFigure3d;
  t.speed = 10.0;
  t.radius = 300.0;
  t.climb_rate = 0.5;
  t.altitude_amplitude = 5.0;
  t.altitude_frequency = 0.2;
  t.bank = 0.1;
  return t;
}

Scenario banana_scenario() {
  Scenario s;
  s.trajectory.kind = TrajectoryKind::kStraight;
  s.trajectory.speed = 1.0;
  s.duration = 1.0;
  s.dt = 0.01;
  s.noise.gyro_std = Vec3::Constant(1.0);
  s.noise.accel_std = Vec3::Constant(0.01);
  s.seed = 1;
  s.montecarlo.n_samples = 20000;
  return s;
}

Scenario consistency_scenario() {
  Scenario s;
  s.trajectory = documented_helix();
  s.duration = 1.0;
  s.dt = 0.01;
  s.noise.gyro_std = Vec3::Constant(1e-3);
  s.noise.accel_std = Vec3::Constant(1e-2);
  s.seed = 2;
  s.montecarlo.n_samples = 20000;
  return s;
}

Scenario lowcost_scenario() {
  Scenario s;
  s.trajectory = documented_helix();
  s.duration = 120.0;
  s.dt = 0.01;
  s.seed = 3;
  s.bias_compare.durations = {1.0, 10.0, 60.0};
  s.bias_compare.magnitude = {1.0, 100.0};
  s.bias_compare.n_draws = 50;
  return s;
}

}  // namespace se23::harness
