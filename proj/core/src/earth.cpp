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

#include "se23/earth.hpp"

#include <cmath>
#include <string>

#include "se23/error.hpp"

namespace se23 {

ExtendedPose to_primed(const ExtendedPose& pose, const EarthModel& earth) {
  return {pose.rot, pose.vel + earth.earth_rate.cross(pose.pos), pose.pos};
}

ExtendedPose from_primed(const ExtendedPose& primed, const EarthModel& earth) {
  return {primed.rot, primed.vel - earth.earth_rate.cross(primed.pos), primed.pos};
}

GammaEarth integrate_gamma(const EarthModel& earth, double t, double dt) {
  if (t < 0.0) throw Error(ErrorKind::kInvalidArgument, "negative duration");
  GammaEarth out;
  if (t == 0.0) return out;
  if (!(dt > 0.0)) throw Error(ErrorKind::kNonPositiveDt, "integrate_gamma");
  if (dt > t) throw Error(ErrorKind::kInvalidArgument, "step longer than the span");

  const auto steps = static_cast<long>(std::ceil(t / dt - 1e-9));
  const double h = t / static_cast<double>(steps);
  const Vec3& w = earth.earth_rate;
  const Vec3& g = earth.gravity;
  const Rotation3 step_rot = so3_exp(-h * w);

  // d/dt (v, x) = (g - w x v, v - w x x)
  const auto rhs = [&](const Vec3& v, const Vec3& x, Vec3& dv, Vec3& dx) {
    dv = g - w.cross(v);
    dx = v - w.cross(x);
  };
  // Compensated (Kahan) accumulation keeps long spans at a few ulp.
  const auto accumulate = [](Vec3& sum, Vec3& carry, const Vec3& increment) {
    const Vec3 y = increment - carry;
    const Vec3 t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  };
  Vec3 v = Vec3::Zero();
  Vec3 x = Vec3::Zero();
  Vec3 carry_v = Vec3::Zero();
  Vec3 carry_x = Vec3::Zero();
  Rotation3 rot = Rotation3::Identity();
  for (long i = 0; i < steps; ++i) {
    Vec3 k1v, k1x, k2v, k2x, k3v, k3x, k4v, k4x;
    rhs(v, x, k1v, k1x);
    rhs(v + 0.5 * h * k1v, x + 0.5 * h * k1x, k2v, k2x);
    rhs(v + 0.5 * h * k2v, x + 0.5 * h * k2x, k3v, k3x);
    rhs(v + h * k3v, x + h * k3x, k4v, k4x);
    accumulate(v, carry_v, (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v));
    accumulate(x, carry_x, (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x));
    rot = step_rot * rot;
  }
  out.gamma_r = rot;
  out.gamma_v = v;
  out.gamma_x = x;
  out.t = t;
  return out;
}

ExtendedPose apply_earth(const PreintDelta& delta, const GammaEarth& gammas,
                         const ExtendedPose& t0, const EarthModel& earth) {
  if (std::abs(delta.duration - gammas.t) > 1e-9) {
    throw Error(ErrorKind::kDurationMismatch,
                "factor covers " + std::to_string(delta.duration) + " s, gammas " +
                    std::to_string(gammas.t) + " s");
  }
  const double t = delta.duration;
  const Vec3 v0_primed = to_primed(t0, earth).vel;
  const Mat3& gr = gammas.gamma_r;
  const Mat3 gr_r0 = gr * t0.rot;

  ExtendedPose out;
  out.rot = gr_r0 * delta.rot_d;
  // X first: the velocity line depends on it.
  out.pos = gammas.gamma_x + gr_r0 * delta.pos_d + t * (gr * v0_primed) + gr * t0.pos;
  out.vel = gammas.gamma_v + gr_r0 * delta.vel_d + gr * v0_primed -
            earth.earth_rate.cross(out.pos);
  return out;
}

}  // namespace se23
