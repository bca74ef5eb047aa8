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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "se23/bias.hpp"
#include "se23/earth.hpp"
#include "se23/harness/trajectory.hpp"
#include "se23/preintegration.hpp"
#include "se23/uncertainty.hpp"

namespace se23::harness {

/// printf("%.17g").
std::string format_double(double v);

// CSV. Readers throw Error(kInvalidArgument) on a wrong header, a short row,
// a non-numeric field or non-uniform timestamps.

void write_imu_csv(std::ostream& out, std::span<const double> t,
                   std::span<const ImuSample> samples);
void write_truth_csv(std::ostream& out, std::span<const double> t,
                     std::span<const ExtendedPose> poses);

struct ImuCsv {
  std::vector<double> t;
  std::vector<ImuSample> samples;
};

/// The step is the mean spacing of the timestamps, which must agree with
/// every individual spacing to 1e-9 relative. A single-row log needs
/// `fallback_dt`.
ImuCsv read_imu_csv(std::istream& in, double fallback_dt = 0.0);

struct CloudRow {
  std::size_t run_id = 0;
  std::string model;  // truth, se23 or naive
  MonteCarloSample sample;
};

void write_cloud_csv(std::ostream& out, std::span<const CloudRow> rows);
void write_rms_csv(std::ostream& out, std::span<const RmsRow> rows);

// JSON documents.

std::string delta_to_json(const PreintDelta& delta);
PreintDelta delta_from_json(const std::string& text);

std::string gamma_to_json(const GammaEarth& gammas);
GammaEarth gamma_from_json(const std::string& text);

/// {"mean": 25 reals (5x5 row-major), "cov": 81 reals}.
std::string gaussian_to_json(const ConcentratedGaussian& g);
ConcentratedGaussian gaussian_from_json(const std::string& text);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace se23::harness
