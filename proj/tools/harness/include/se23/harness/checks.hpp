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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace se23::harness {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;   // measured values against their thresholds
  double seconds = 0.0;
};

struct Check {
  std::string name;
  std::string suite;      // core, preint, earth, uncertainty or bias
  double time_limit = 0;  // s
  std::function<CheckResult()> run;
};

/// Every oracle check, in suite order.
const std::vector<Check>& all_checks();

/// Checks of one suite, or all of them for "all". Throws
/// Error(kInvalidArgument) for an unknown suite name.
std::vector<Check> suite_checks(std::string_view suite);

/// Runs a check, times it and folds the time limit into the verdict.
CheckResult run_timed(const Check& check);

std::string format_result(const CheckResult& r, double time_limit);

// Individual checks.
CheckResult check_lie_core();
CheckResult check_group_affine();
CheckResult check_flat_exactness();
CheckResult check_inverse_dynamics_roundtrip();
CheckResult check_earth_reconstruction();
CheckResult check_log_linearity();
CheckResult check_product_formula();
CheckResult check_riccati_consistency();
CheckResult check_banana();
CheckResult check_bias_exactness();
CheckResult check_bias_slope();
CheckResult check_bias_table();

}  // namespace se23::harness
