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

#include "se23/harness/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "se23/earth.hpp"
#include "se23/error.hpp"
#include "se23/harness/checks.hpp"
#include "se23/harness/config.hpp"
#include "se23/harness/experiments.hpp"
#include "se23/harness/io.hpp"
#include "se23/harness/trajectory.hpp"
#include "se23/preintegrator.hpp"
#include "se23/random.hpp"
#include "se23/uncertainty.hpp"

namespace se23::harness {
namespace {

struct Options {
  std::string config;
  std::string imu;
  std::string truth;
  std::string out;
  std::string delta;
  std::string prior;
  std::string gamma_out;
  std::string mode;
  std::string jacobian = "refined";
  std::string suite = "all";
  bool earth = false;
  unsigned threads = 0;
  std::size_t samples = 0;
};

Scenario scenario_or_default(const Options& o) {
  return o.config.empty() ? Scenario{} : load_scenario(o.config);
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Scenario s = load_scenario(o.config);
  const ImuLog log = inverse_dynamics(s.trajectory, s.earth, s.duration, s.dt);
  std::vector<ImuSample> measured = log.samples;
  std::mt19937_64 rng = make_rng(s.seed, Stream::kNoise, 0);
  for (ImuSample& u : measured) u = corrupt_sample(u, s.noise, s.bias, rng);

  std::vector<double> t_truth = log.t;
  t_truth.push_back(static_cast<double>(log.samples.size()) * s.dt);
  std::ostringstream imu;
  write_imu_csv(imu, log.t, measured);
  std::ostringstream truth;
  write_truth_csv(truth, t_truth, log.truth);
  write_file(o.imu, imu.str());
  write_file(o.truth, truth.str());
  out << "wrote " << measured.size() << " samples to " << o.imu << " and "
      << log.truth.size() << " poses to " << o.truth << "\n";
  return kExitOk;
}

int cmd_preintegrate(const Options& o, std::ostream& out) {
  const Scenario s = scenario_or_default(o);
  std::ifstream in(o.imu);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + o.imu);
  const ImuCsv log = read_imu_csv(in, s.dt);

  PreintegratorOptions options;
  options.mode = o.mode.empty() ? s.mode : step_mode_from_string(o.mode);
  options.ref_bias = s.bias;
  options.noise = s.noise;
  options.jacobian = jacobian_mode_from_string(o.jacobian);
  const PreintDelta delta = preintegrate(log.samples, options);
  write_file(o.out, delta_to_json(delta));
  out << "preintegrated " << log.samples.size() << " samples over "
      << format_double(delta.duration) << " s (" << to_string(options.mode) << ")\n";

  if (o.earth) {
    EarthModel earth = s.earth;
    if (o.config.empty()) earth = EarthModel::Rotating(Vec3::UnitZ());
    const GammaEarth gammas = integrate_gamma(earth, delta.duration, log.samples.front().dt);
    const std::string path = o.gamma_out.empty() ? o.out + ".gamma.json" : o.gamma_out;
    write_file(path, gamma_to_json(gammas));
    out << "wrote Earth terms to " << path << "\n";
  }
  return kExitOk;
}

int cmd_propagate(const Options& o, std::ostream& out) {
  const Scenario s = scenario_or_default(o);
  if (!s.earth.is_flat()) {
    throw Error(ErrorKind::kInvalidArgument,
                "covariance propagation is implemented for the flat model only");
  }
  const PreintDelta delta = delta_from_json(read_text(o.delta));
  ConcentratedGaussian prior;
  if (!o.prior.empty()) prior = gaussian_from_json(read_text(o.prior));
  const ConcentratedGaussian post = propagate_through_factor(prior, delta, s.earth);
  write_file(o.out, gaussian_to_json(post));
  out << "propagated over " << format_double(delta.duration) << " s\n";
  return kExitOk;
}

int cmd_montecarlo(const Options& o, std::ostream& out) {
  Scenario s = load_scenario(o.config);
  if (!s.earth.is_flat()) {
    throw Error(ErrorKind::kInvalidArgument, "Monte Carlo is implemented for the flat model only");
  }
  if (o.threads > 0) s.threads = o.threads;
  if (o.samples > 0) s.montecarlo.n_samples = o.samples;
  const BananaReport report = run_banana(s);
  const std::vector<CloudRow> rows = cloud_rows(report);
  std::ostringstream csv;
  write_cloud_csv(csv, rows);
  write_file(o.out, csv.str());
  out << "wrote " << rows.size() << " rows to " << o.out << "\n";
  out << "curvature truth " << format_double(report.truth_metrics.curvature) << " se23 "
      << format_double(report.se23_metrics.curvature) << " naive "
      << format_double(report.naive_metrics.curvature) << "\n";
  out << "out-of-plane std truth " << format_double(report.truth_metrics.out_of_plane_std)
      << " se23 " << format_double(report.se23_metrics.out_of_plane_std) << " naive "
      << format_double(report.naive_metrics.out_of_plane_std) << "\n";
  return kExitOk;
}

int cmd_bias_compare(const Options& o, std::ostream& out) {
  Scenario s = load_scenario(o.config);
  if (o.threads > 0) s.threads = o.threads;
  const ImuLog log = inverse_dynamics(s.trajectory, s.earth, s.duration, s.dt);
  BiasComparisonConfig config;
  config.durations = s.bias_compare.durations;
  config.magnitude = s.bias_compare.magnitude;
  config.n_draws = s.bias_compare.n_draws;
  config.seed = s.seed;
  config.mode = s.mode;
  config.threads = s.threads;
  const std::vector<RmsRow> rows = bias_comparison_experiment(log.samples, config);
  std::ostringstream csv;
  write_rms_csv(csv, rows);
  write_file(o.out, csv.str());
  out << csv.str();
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const std::vector<Check> checks = suite_checks(o.suite);
  int failed = 0;
  for (const Check& c : checks) {
    const CheckResult r = run_timed(c);
    out << format_result(r, c.time_limit) << std::endl;
    if (!r.passed) ++failed;
  }
  out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitValidationFailed;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended-pose preintegration and uncertainty tools"};
  app.require_subcommand(1);
  Options o;

  auto* simulate = app.add_subcommand("simulate", "Synthesize IMU and truth logs from a scenario");
  simulate->add_option("--config", o.config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  simulate->add_option("--imu", o.imu, "Output IMU CSV")->required();
  simulate->add_option("--truth", o.truth, "Output truth CSV")->required();

  auto* preint = app.add_subcommand("preintegrate", "Preintegrate an IMU log into a factor");
  preint->add_option("--imu", o.imu, "Input IMU CSV")->required()->check(CLI::ExistingFile);
  preint->add_option("--out", o.out, "Output factor JSON")->required();
  preint->add_option("--mode", o.mode, "first_order or exact_step")
      ->check(CLI::IsMember({"first_order", "exact_step"}));
  preint->add_option("--jacobian", o.jacobian, "simple or refined bias injection")
      ->check(CLI::IsMember({"simple", "refined"}));
  preint->add_option("--config", o.config, "Scenario JSON (noise, reference bias, Earth model)")
      ->check(CLI::ExistingFile);
  preint->add_flag("--earth", o.earth, "Also integrate the rotating-Earth terms");
  preint->add_option("--gamma-out", o.gamma_out, "Output JSON for the Earth terms");

  auto* propagate = app.add_subcommand("propagate", "Push a Gaussian prior through a factor");
  propagate->add_option("--delta", o.delta, "Factor JSON")->required()->check(CLI::ExistingFile);
  propagate->add_option("--prior", o.prior, "Prior Gaussian JSON (default: identity, zero cov)")
      ->check(CLI::ExistingFile);
  propagate->add_option("--config", o.config, "Scenario JSON (gravity)")->check(CLI::ExistingFile);
  propagate->add_option("--out", o.out, "Output Gaussian JSON")->required();

  auto* mc = app.add_subcommand("montecarlo", "Endpoint point clouds: truth, se23, naive");
  mc->add_option("--config", o.config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  mc->add_option("--out", o.out, "Output cloud CSV")->required();
  mc->add_option("--threads", o.threads, "Worker threads (overrides the config)");
  mc->add_option("--samples", o.samples, "Samples per model (overrides the config)");

  auto* bias = app.add_subcommand("bias-compare", "RMS of classical vs exponential bias correction");
  bias->add_option("--config", o.config, "Scenario JSON")->required()->check(CLI::ExistingFile);
  bias->add_option("--out", o.out, "Output RMS CSV")->required();
  bias->add_option("--threads", o.threads, "Worker threads (overrides the config)");

  auto* validate = app.add_subcommand("validate", "Run oracle checks");
  validate->add_option("--suite", o.suite, "core, preint, earth, uncertainty, bias or all")
      ->check(CLI::IsMember({"core", "preint", "earth", "uncertainty", "bias", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*simulate) return cmd_simulate(o, out);
    if (*preint) return cmd_preintegrate(o, out);
    if (*propagate) return cmd_propagate(o, out);
    if (*mc) return cmd_montecarlo(o, out);
    if (*bias) return cmd_bias_compare(o, out);
    if (*validate) return cmd_validate(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace se23::harness
