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

#include "se23/harness/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "se23/bias.hpp"
#include "se23/earth.hpp"
#include "se23/error.hpp"
#include "se23/extended_pose.hpp"
#include "se23/harness/experiments.hpp"
#include "se23/harness/presets.hpp"
#include "se23/harness/trajectory.hpp"
#include "se23/integrator.hpp"
#include "se23/preintegration.hpp"
#include "se23/preintegrator.hpp"
#include "se23/random.hpp"
#include "se23/series.hpp"
#include "se23/uncertainty.hpp"

namespace se23::harness {
namespace {

constexpr std::uint64_t kCheckSeed = 20260101;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Tangent9 random_tangent(std::mt19937_64& rng, double max_norm) {
  std::uniform_real_distribution<double> radius(0.0, max_norm);
  return standard_normal<9>(rng).normalized() * radius(rng);
}

ExtendedPose random_pose(std::mt19937_64& rng, double rot_scale, double vel_scale,
                         double pos_scale) {
  const Vec3 w = standard_normal<3>(rng).normalized() *
                 std::uniform_real_distribution<double>(0.0, rot_scale)(rng);
  return {so3_exp(w), vel_scale * standard_normal<3>(rng), pos_scale * standard_normal<3>(rng)};
}

ImuSample random_sample(std::mt19937_64& rng, double dt) {
  ImuSample u;
  u.gyro = standard_normal<3>(rng);
  u.accel = 5.0 * standard_normal<3>(rng) + Vec3(0.0, 0.0, kStandardGravity);
  u.dt = dt;
  return u;
}

CheckResult verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail), 0.0};
}

}  // namespace

CheckResult check_lie_core() {
  std::mt19937_64 rng = make_rng(kCheckSeed, Stream::kModelSampling, 1);
  double series_err = 0.0;
  double roundtrip_err = 0.0;
  double adjoint_err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Tangent9 xi = random_tangent(rng, 5.0);
    const ExtendedPose t = exp_map(xi);
    const Mat5 series = series_expm(hat(xi), 30);
    series_err = std::max(series_err, (t.matrix() - series).cwiseAbs().maxCoeff());

    const ExtendedPose back = exp_map(log_map(t));
    roundtrip_err = std::max(roundtrip_err, distance(back, t));
    if (omega_of(xi).norm() < 3.0) {
      roundtrip_err = std::max(roundtrip_err, (log_map(t) - xi).norm());
    }

    const ExtendedPose g = exp_map(random_tangent(rng, 2.0));
    const Tangent9 zeta = random_tangent(rng, 1.0);
    const ExtendedPose lhs = exp_map(g.adjoint() * zeta);
    const ExtendedPose rhs = g * exp_map(zeta) * g.inverse();
    adjoint_err = std::max(adjoint_err, distance(lhs, rhs));
  }
  const bool ok = series_err <= 1e-12 && roundtrip_err <= 1e-10 && adjoint_err <= 1e-10;
  return verdict("Lie-core oracle", ok,
                 "exp vs series " + sci(series_err) + " <= 1e-12, roundtrip " +
                     sci(roundtrip_err) + " <= 1e-10, adjoint " + sci(adjoint_err) +
                     " <= 1e-10");
}

CheckResult check_group_affine() {
  std::mt19937_64 rng = make_rng(kCheckSeed, Stream::kModelSampling, 2);
  const EarthModel flat = EarthModel::Flat();
  const EarthModel rotating = EarthModel::Rotating(Vec3(0.3, 0.5, 0.8));
  double flat_err = 0.0;
  double earth_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ExtendedPose t1 = exp_map(random_tangent(rng, 2.0));
    const ExtendedPose t2 = exp_map(random_tangent(rng, 2.0));
    const ImuSample u = random_sample(rng, 0.01);
    const AffineEmbedding f = affine_embedding(u, flat, false);
    const AffineEmbedding e = affine_embedding(u, rotating, true);
    flat_err = std::max(flat_err, group_affine_residual(f, t1, t2));
    earth_err = std::max(earth_err, group_affine_residual(e, t1, t2));
  }
  const bool ok = flat_err <= 1e-12 && earth_err <= 1e-12;
  return verdict("Group-affine residual", ok,
                 "flat " + sci(flat_err) + ", primed rotating Earth " + sci(earth_err) +
                     " <= 1e-12");
}

CheckResult check_flat_exactness() {
  std::mt19937_64 rng = make_rng(kCheckSeed, Stream::kModelSampling, 3);
  const EarthModel flat = EarthModel::Flat();
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const ExtendedPose t0 = random_pose(rng, 3.0, 5.0, 20.0);
    std::vector<ImuSample> samples;
    for (int k = 0; k < 100; ++k) samples.push_back(random_sample(rng, 0.01));

    PreintegratorOptions options;
    options.mode = StepMode::kExactStep;
    const PreintDelta delta = preintegrate(samples, options);
    ExtendedPose state = t0;
    for (const ImuSample& u : samples) state = propagate_step(state, u, StepMode::kExactStep, flat);
    worst = std::max(worst, distance(apply_flat(delta, t0, flat), state));
  }
  return verdict("Flat preintegration exactness", worst <= 1e-10,
                 "apply_flat vs step-by-step " + sci(worst) + " <= 1e-10");
}

CheckResult check_inverse_dynamics_roundtrip() {
  TrajectorySpec spec;
  spec.kind = TrajectoryKind::kFigure3d;
  spec.speed = 5.0;
  spec.radius = 100.0;
  spec.climb_rate = 0.2;
  spec.altitude_amplitude = 2.0;
  spec.altitude_frequency = 0.1;
  spec.bank = 0.05;
  const EarthModel flat = EarthModel::Flat();
  const ImuLog log = inverse_dynamics(spec, flat, 60.0, 0.01);
  const std::vector<ExtendedPose> states =
      rk4_trajectory(flat_dynamics(flat), log.truth.front(), log.samples, 1);
  double worst = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    worst = std::max(worst, (states[k].pos - log.truth[k].pos).norm());
  }
  return verdict("Inverse-dynamics roundtrip", worst <= 1e-6,
                 "RK4 of synthesized log vs analytic path " + sci(worst) + " m <= 1e-6 m");
}

CheckResult check_earth_reconstruction() {
  Scenario s;
  s.trajectory = documented_helix();
  s.duration = 60.0;
  s.dt = 0.01;
  const EarthModel earth = EarthModel::Rotating(Vec3(0.0, 1.0, 1.0), 7.29e-5);
  const ImuLog log = inverse_dynamics(s.trajectory, earth, s.duration, s.dt);
  const ExtendedPose& t0 = log.truth.front();

  PreintegratorOptions options;
  const PreintDelta delta = preintegrate(log.samples, options);
  const GammaEarth gammas = integrate_gamma(earth, delta.duration, s.dt);
  const ExtendedPose recon = apply_earth(delta, gammas, t0, earth);
  const ExtendedPose reference =
      rk4_integrate(earth_dynamics(earth), t0, log.samples, 4).pose;
  const double pos_err = (recon.pos - reference.pos).norm();
  const double vel_err = (recon.vel - reference.vel).norm();

  const EarthModel still{earth.gravity, Vec3::Zero()};
  const ExtendedPose degenerate =
      apply_earth(delta, integrate_gamma(still, delta.duration, s.dt), t0, still);
  const double flat_err = distance(degenerate, apply_flat(delta, t0, still));

  const bool ok = pos_err <= 1e-5 && vel_err <= 1e-6 && flat_err <= 1e-10;
  return verdict("Rotating-Earth reconstruction", ok,
                 "position " + sci(pos_err) + " m <= 1e-5, velocity " + sci(vel_err) +
                     " m/s <= 1e-6, zero-rate vs flat " + sci(flat_err) + " <= 1e-10");
}

CheckResult check_log_linearity() {
  std::mt19937_64 rng = make_rng(kCheckSeed, Stream::kModelSampling, 4);
  const EarthModel flat = EarthModel::Flat();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ExtendedPose mean = random_pose(rng, 3.0, 5.0, 10.0);
    const Tangent9 xi = random_tangent(rng, 1.0);
    const ImuSample u = random_sample(rng, 0.01);
    const ExtendedPose ups = step_factor(u, StepMode::kExactStep);
    const ExtendedPose perturbed =
        propagate_step(mean * exp_map(xi), u, StepMode::kExactStep, flat);
    const ExtendedPose linear = propagate_step(mean, u, StepMode::kExactStep, flat) *
                                exp_map(step_matrix(ups, u.dt) * xi);
    worst = std::max(worst, distance(perturbed, linear));
  }
  return verdict("Log-linearity", worst <= 1e-11,
                 "transported vs Ad(U^-1) F xi " + sci(worst) + " <= 1e-11");
}

CheckResult check_product_formula() {
  std::mt19937_64 rng = make_rng(kCheckSeed, Stream::kModelSampling, 5);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Tangent9> etas;
    std::vector<Mat9> fs;
    for (int k = 0; k < 50; ++k) {
      const ImuSample u = random_sample(rng, 0.01);
      fs.push_back(step_matrix(step_factor(u, StepMode::kExactStep), u.dt));
      etas.push_back(random_tangent(rng, 0.05));
    }
    const Tangent9 xi0 = random_tangent(rng, 0.2);
    const Tangent9 product = exact_error_product(xi0, etas, fs);
    const Tangent9 recursion = error_recursion(xi0, etas, fs);
    worst = std::max(worst, (product - recursion).norm());
  }
  return verdict("Error product formula", worst <= 1e-10,
                 "product vs recursion " + sci(worst) + " <= 1e-10");
}

CheckResult check_riccati_consistency() {
  const ConsistencyReport r = run_consistency(consistency_scenario());
  const bool ok = r.relative_frobenius <= 0.15 && r.mahalanobis_mean >= 8.0 &&
                  r.mahalanobis_mean <= 10.0;
  return verdict("Riccati consistency", ok,
                 "relative Frobenius " + sci(r.relative_frobenius) +
                     " <= 0.15, Mahalanobis mean " + sci(r.mahalanobis_mean) +
                     " in [8, 10], mean z " + sci(r.max_mean_z));
}

CheckResult check_banana() {
  const BananaReport r = run_banana(banana_scenario());
  const double ct = r.truth_metrics.curvature;
  const double cs = r.se23_metrics.curvature;
  const double rel = std::abs(cs - ct) / std::abs(ct);
  const double oop_ratio = r.naive_metrics.out_of_plane_std / r.truth_metrics.out_of_plane_std;
  const bool same_sign = ct != 0.0 && std::signbit(ct) == std::signbit(cs);
  const bool ok = same_sign && rel <= 0.25 && oop_ratio < 0.5;
  return verdict("Banana reproduction", ok,
                 "curvature truth " + sci(ct) + " se23 " + sci(cs) + " (rel diff " + sci(rel) +
                     " <= 0.25, sign " + (same_sign ? "match" : "mismatch") +
                     "), naive/truth out-of-plane std " + sci(oop_ratio) + " < 0.5");
}

CheckResult check_bias_exactness() {
  const TrajectorySpec helix = documented_helix();
  const ImuLog log = inverse_dynamics(helix, EarthModel::Flat(), 10.0, 0.01);
  std::mt19937_64 rng = make_rng(kCheckSeed, Stream::kBiasDraws, 6);
  std::uniform_real_distribution<double> magnitude(0.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t start = static_cast<std::size_t>(i) * 40;
    const std::span<const ImuSample> window(log.samples.data() + start, 100);
    const Vec3 dba = standard_normal<3>(rng).normalized() * (i == 0 ? 10.0 : magnitude(rng));
    BiasState ref;
    ref.accel = 0.1 * standard_normal<3>(rng);
    PreintegratorOptions at_ref;
    at_ref.ref_bias = ref;
    PreintegratorOptions at_new = at_ref;
    at_new.ref_bias.accel += dba;

    Vec6 db = Vec6::Zero();
    db.tail<3>() = dba;
    const PreintDelta corrected = exponential_correction(preintegrate(window, at_ref), {db});
    const PreintDelta reint = preintegrate(window, at_new);
    worst = std::max(worst, distance(upsilon_of(corrected), upsilon_of(reint)));
  }
  return verdict("Accelerometer bias exactness", worst <= 1e-10,
                 "exp-corrected vs re-integrated " + sci(worst) + " <= 1e-10");
}

CheckResult check_bias_slope() {
  const ImuLog log = inverse_dynamics(documented_helix(), EarthModel::Flat(), 1.0, 0.01);
  std::mt19937_64 rng = make_rng(kCheckSeed, Stream::kBiasDraws, 7);
  const PreintegratorOptions at_ref;
  const PreintDelta ref = preintegrate(log.samples, at_ref);
  const double levels[3] = {1e-3, 1e-2, 1e-1};

  double min_slope = 1e300;
  double max_slope = -1e300;
  for (int dir = 0; dir < 3; ++dir) {
    const Vec3 axis = standard_normal<3>(rng).normalized();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const double m : levels) {
      Vec6 db = Vec6::Zero();
      db.head<3>() = m * axis;
      PreintegratorOptions at_new = at_ref;
      at_new.ref_bias.gyro = m * axis;
      const double err = distance(upsilon_of(exponential_correction(ref, {db})),
                                  upsilon_of(preintegrate(log.samples, at_new)));
      const double x = std::log10(m);
      const double y = std::log10(err);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    min_slope = std::min(min_slope, slope);
    max_slope = std::max(max_slope, slope);
  }
  const bool ok = min_slope >= 1.7 && max_slope <= 2.3;
  return verdict("Gyro bias first-order remainder", ok,
                 "log-log slopes in [" + sci(min_slope) + ", " + sci(max_slope) +
                     "] within [1.7, 2.3]");
}

CheckResult check_bias_table() {
  const Scenario s = lowcost_scenario();
  const ImuLog log = inverse_dynamics(s.trajectory, s.earth, s.duration, s.dt);
  BiasComparisonConfig config;
  config.durations = s.bias_compare.durations;
  config.magnitude = s.bias_compare.magnitude;
  config.n_draws = s.bias_compare.n_draws;
  config.seed = s.seed;
  config.mode = s.mode;
  config.threads = s.threads;
  const std::vector<RmsRow> rows = bias_comparison_experiment(log.samples, config);

  bool ok = config.n_draws >= 50;
  std::ostringstream detail;
  for (const double t : {10.0, 60.0}) {
    double classical = -1.0;
    double proposed = -1.0;
    for (const RmsRow& r : rows) {
      if (r.duration != t) continue;
      (r.method == "classical" ? classical : proposed) = r.velocity_rms;
    }
    ok = ok && classical >= 0.0 && proposed >= 0.0 && proposed < classical;
    detail << "T=" << t << " s velocity RMS proposed " << sci(proposed) << " < classical "
           << sci(classical) << "; ";
  }
  detail << config.n_draws << " draws";
  return verdict("Bias correction comparison", ok, detail.str());
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"Lie-core oracle", "core", 5.0, check_lie_core},
      {"Group-affine residual", "core", 5.0, check_group_affine},
      {"Flat preintegration exactness", "preint", 10.0, check_flat_exactness},
      {"Inverse-dynamics roundtrip", "preint", 10.0, check_inverse_dynamics_roundtrip},
      {"Rotating-Earth reconstruction", "earth", 30.0, check_earth_reconstruction},
      {"Log-linearity", "uncertainty", 5.0, check_log_linearity},
      {"Error product formula", "uncertainty", 10.0, check_product_formula},
      {"Riccati consistency", "uncertainty", 120.0, check_riccati_consistency},
      {"Banana reproduction", "uncertainty", 120.0, check_banana},
      {"Accelerometer bias exactness", "bias", 10.0, check_bias_exactness},
      {"Gyro bias first-order remainder", "bias", 30.0, check_bias_slope},
      {"Bias correction comparison", "bias", 300.0, check_bias_table},
  };
  return checks;
}

std::vector<Check> suite_checks(std::string_view suite) {
  static constexpr std::string_view kSuites[] = {"core", "preint", "earth", "uncertainty",
                                                 "bias", "all"};
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites)) {
    throw Error(ErrorKind::kInvalidArgument, "unknown suite '" + std::string(suite) + "'");
  }
  std::vector<Check> out;
  for (const Check& c : all_checks()) {
    if (suite == "all" || c.suite == suite) out.push_back(c);
  }
  return out;
}

CheckResult run_timed(const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = check.run();
  } catch (const std::exception& e) {
    r = {check.name, false, std::string("threw: ") + e.what(), 0.0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds >= check.time_limit) r.passed = false;
  return r;
}

std::string format_result(const CheckResult& r, double time_limit) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s < %.0f s", r.seconds, time_limit);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name + ": " + r.detail + " [" +
         timing + "]";
}

}  // namespace se23::harness
