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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "se23/harness/cli.hpp"
#include "se23/harness/config.hpp"
#include "se23/harness/io.hpp"

namespace se23::harness {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("se23_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "se23");
    std::vector<char*> argv;
    for (std::string& a : args) argv.push_back(a.data());
    out_.str("");
    err_.str("");
    return run_cli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_config(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return path(name);
  }

  static std::size_t line_count(const std::string& file) {
    std::ifstream in(file);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) ++n;
    return n;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), kExitBadInput);
  EXPECT_EQ(run({"frobnicate"}), kExitBadInput);
  EXPECT_EQ(run({"simulate", "--config", path("nope.json"), "--imu", "a", "--truth", "b"}),
            kExitBadInput);
  EXPECT_EQ(run({"--help"}), kExitOk);
}

TEST_F(CliTest, UnknownConfigKeyIsBadInput) {
  const std::string cfg = write_config("bad.json", R"({"duraton": 1.0})");
  EXPECT_EQ(run({"simulate", "--config", cfg, "--imu", path("imu.csv"), "--truth",
                 path("truth.csv")}),
            kExitBadInput);
  EXPECT_NE(err_.str().find("duraton"), std::string::npos);
}

TEST_F(CliTest, SimulatePreintegratePropagate) {
  const std::string cfg = write_config(
      "helix.json",
      R"({"trajectory": {"kind": "circle", "speed": 5, "radius": 50}, "duration": 2.0,
          "dt": 0.01, "noise": {"gyro_std": 0.001, "accel_std": 0.01}})");
  ASSERT_EQ(run({"simulate", "--config", cfg, "--imu", path("imu.csv"), "--truth",
                 path("truth.csv")}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(line_count(path("imu.csv")), 201u);
  EXPECT_EQ(line_count(path("truth.csv")), 202u);

  ASSERT_EQ(run({"preintegrate", "--imu", path("imu.csv"), "--out", path("delta.json"),
                 "--config", cfg}),
            kExitOk)
      << err_.str();
  const PreintDelta d = delta_from_json(read_text(path("delta.json")));
  EXPECT_NEAR(d.duration, 2.0, 1e-12);
  EXPECT_GT(d.cov(0, 0), 0.0);

  ASSERT_EQ(run({"propagate", "--delta", path("delta.json"), "--out", path("post.json")}),
            kExitOk)
      << err_.str();
  const ConcentratedGaussian g = gaussian_from_json(read_text(path("post.json")));
  EXPECT_EQ(g.cov, d.cov);

  EXPECT_EQ(run({"preintegrate", "--imu", path("imu.csv"), "--out", path("d2.json"), "--mode",
                 "euler"}),
            kExitBadInput);
}

TEST_F(CliTest, PreintegrateWithEarthWritesGammas) {
  const std::string cfg = write_config(
      "earth.json", R"({"duration": 1.0, "earth": {"earth_rate": [0, 0, 7.2921159e-5]}})");
  ASSERT_EQ(run({"simulate", "--config", cfg, "--imu", path("imu.csv"), "--truth",
                 path("truth.csv")}),
            kExitOk);
  ASSERT_EQ(run({"preintegrate", "--imu", path("imu.csv"), "--out", path("delta.json"),
                 "--config", cfg, "--earth", "--gamma-out", path("gamma.json")}),
            kExitOk)
      << err_.str();
  EXPECT_NEAR(gamma_from_json(read_text(path("gamma.json"))).t, 1.0, 1e-12);
}

TEST_F(CliTest, MonteCarloRows) {
  const std::string cfg = write_config(
      "mc.json", R"({"duration": 0.2, "noise": {"gyro_std": 0.1, "accel_std": 0.01}})");
  ASSERT_EQ(run({"montecarlo", "--config", cfg, "--out", path("cloud.csv"), "--samples", "50",
                 "--threads", "2"}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(line_count(path("cloud.csv")), 151u);
}

TEST_F(CliTest, BiasCompareRows) {
  const std::string cfg = write_config(
      "bias.json",
      R"({"trajectory": {"kind": "circle", "speed": 10, "radius": 300}, "duration": 2.0,
          "bias_compare": {"durations": [1.0, 2.0], "n_draws": 3}})");
  ASSERT_EQ(run({"bias-compare", "--config", cfg, "--out", path("rms.csv")}), kExitOk)
      << err_.str();
  EXPECT_EQ(line_count(path("rms.csv")), 5u);
}

TEST_F(CliTest, ValidateSuites) {
  EXPECT_EQ(run({"validate", "--suite", "core"}), kExitOk) << out_.str();
  EXPECT_NE(out_.str().find("PASS"), std::string::npos);
  EXPECT_EQ(run({"validate", "--suite", "nonsense"}), kExitBadInput);
}

}  // namespace
}  // namespace se23::harness
