// Copyright 2026 The fdp-edgeworth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fdp/csv_io.h"
#include "json.hpp"

namespace fdp::cli {
namespace {

using ::testing::HasSubstr;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "fdp");
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("FDP_GRID_SIZE");
    dir_ = std::filesystem::temp_directory_path() /
           ("fdp_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override {
    unsetenv("FDP_GRID_SIZE");
    std::filesystem::remove_all(dir_);
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

// Closed-form Neyman-Pearson curve of Lap(0, 1) vs Lap(theta, 1).
double LaplaceTradeoff(double theta, double alpha) {
  const double c = std::exp(-theta);
  if (alpha < c / 2.0) return 1.0 - alpha / c;
  if (alpha <= 0.5) return c / (4.0 * alpha);
  return c * (1.0 - alpha);
}

TEST_F(CliTest, ComposeAllMatchesGolden) {
  const auto r = RunCli({"compose", "--pair", "laplace", "--param", "3.0", "--n", "1",
                         "--method", "all", "--grid", "1001"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string golden =
      ReadFile(std::filesystem::path(FDP_GOLDEN_DIR) / "compose_laplace3_n1_all.csv");
  EXPECT_EQ(r.out, golden);
  EXPECT_THAT(r.out, ::testing::StartsWith("alpha,beta_clt,beta_edgeworth,beta_exact\n"));
  // The exact column of the golden file is itself checked against the
  // closed form, so a regenerated golden cannot drift silently.
  std::istringstream in(golden);
  auto exact = ReadCurveCsv(in, "beta_exact");
  ASSERT_TRUE(exact.ok());
  for (size_t i = 0; i < exact->size(); ++i) {
    EXPECT_NEAR(exact->betas()[i], LaplaceTradeoff(3.0, exact->alphas()[i]), 1e-5);
  }
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args = {"compose", "--pair", "subsampled-gaussian",
                                         "--param", "0.3,1.0", "--n", "4",
                                         "--method", "all", "--grid", "501"};
  const auto a = RunCli(args);
  const auto b = RunCli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, WritesToFileAndJson) {
  const auto r = RunCli({"compose", "--pair", "gaussian", "--param", "1", "--n", "4",
                         "--method", "clt", "--grid", "5", "--out", Path("c.json"),
                         "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto j = nlohmann::json::parse(ReadFile(Path("c.json")));
  ASSERT_EQ(j["alpha"].size(), 5u);
  EXPECT_EQ(j["alpha"][2], 0.5);
  EXPECT_NEAR(j["beta"][2].get<double>(), 0.022750131948179207, 1e-15);  // Phi(-2)
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"compose", "--pair", "nope", "--param", "1", "--n", "2"},
           {"compose", "--pair", "laplace", "--param", "1"},
           {"compose", "--pair", "laplace", "--param", "1", "--n", "0"},
           {"compose", "--pair", "laplace", "--param", "1,2", "--n", "2"},
           {"compose", "--pair", "laplace", "--param", "1", "--n", "2", "--degree", "1"},
           {"compose", "--pair", "laplace", "--param", "1", "--n", "2", "--grid", "abc"},
           {"sgd", "--n", "2", "--p", "0.1"},
           {"interpret"},
           {"bench", "--pair", "laplace", "--param", "1", "--n-list", "2,x"},
       }) {
    const auto r = RunCli(args);
    EXPECT_EQ(r.code, kExitUsage) << ::testing::PrintToString(args);
    EXPECT_FALSE(r.err.empty());
  }
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = RunCli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("compose"));
}

TEST_F(CliTest, BadFlagValuesAreUsageErrors) {
  EXPECT_EQ(RunCli({"sgd", "--n", "2", "--p", "1.5", "--sigma", "1"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"interpret", "--in", Path("does_not_exist.csv")}).code, kExitUsage);
}

TEST_F(CliTest, NumericFailuresExitOne) {
  std::ofstream(Path("bad.csv")) << "alpha,beta\n0,1\n0.5,0.9\n0.4,0.1\n1,0\n";
  const auto r = RunCli({"interpret", "--in", Path("bad.csv")});
  EXPECT_EQ(r.code, kExitNumeric);
  EXPECT_FALSE(r.err.empty());
  std::ofstream(Path("rising.csv")) << "alpha,beta\n0,0.2\n0.5,0.9\n1,0\n";
  EXPECT_EQ(RunCli({"dual", "--in", Path("rising.csv")}).code, kExitNumeric);
}

TEST_F(CliTest, SgdWithoutSamplingIsIdentity) {
  const auto r = RunCli({"sgd", "--n", "1", "--p", "0", "--sigma", "1", "--method",
                         "edgeworth", "--grid", "101"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ostringstream want;
  ASSERT_TRUE(WriteCurveCsv(want, *MakeCurve(IdentityFamily{}, 101)).ok());
  EXPECT_EQ(r.out, want.str());
}

TEST_F(CliTest, InterpretIdentity) {
  std::ofstream(Path("id.csv")) << "alpha,beta\n0,1\n0.5,0.5\n1,0\n";
  const auto r = RunCli({"interpret", "--in", Path("id.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["mu_star"].get<double>(), 0.0);
  EXPECT_EQ(j["gamma"].get<double>(), 0.5);
  EXPECT_EQ(j["alpha_star"].get<double>(), 0.5);
  EXPECT_FALSE(j.contains("symmetrized"));
  EXPECT_EQ(std::vector<std::string>({"mu_star", "gamma", "alpha_star"}),
            std::vector<std::string>({j.begin().key(), std::next(j.begin()).key(),
                                      std::next(j.begin(), 2).key()}));
}

TEST_F(CliTest, ComposeThenInterpretRoundTrips) {
  for (const std::string method : {"clt", "edgeworth", "exact"}) {
    for (const std::vector<std::string>& pair : std::vector<std::vector<std::string>>{
             {"gaussian", "0.8"}, {"laplace", "1.2"}, {"subsampled-gaussian", "0.4,1.0"}}) {
      const std::string out = Path("rt_" + method + "_" + pair[0] + ".csv");
      const auto c = RunCli({"compose", "--pair", pair[0], "--param", pair[1], "--n", "3",
                             "--method", method, "--grid", "1001", "--out", out});
      ASSERT_EQ(c.code, kExitOk) << c.err;
      const auto r = RunCli({"interpret", "--in", out});
      ASSERT_EQ(r.code, kExitOk) << method << " " << pair[0] << ": " << r.err;
      const auto j = nlohmann::json::parse(r.out);
      EXPECT_GE(j["mu_star"].get<double>(), 0.0);
      // The subsampled pair is asymmetric and gets symmetrized on the way in,
      // except under the CLT, which always yields a GDP curve.
      EXPECT_EQ(j.contains("symmetrized"),
                pair[0] == "subsampled-gaussian" && method != "clt")
          << method;
    }
  }
}

TEST_F(CliTest, GridPrecedence) {
  const std::vector<std::string> base = {"compose", "--pair", "gaussian", "--param", "1",
                                         "--n", "1", "--method", "clt"};
  auto rows = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '\n') - 1;
  };
  EXPECT_EQ(rows(RunCli(base).out), 10001);
  setenv("FDP_GRID_SIZE", "21", 1);
  EXPECT_EQ(rows(RunCli(base).out), 21);
  auto flagged = base;
  flagged.insert(flagged.end(), {"--grid", "11"});
  EXPECT_EQ(rows(RunCli(flagged).out), 11);
  setenv("FDP_GRID_SIZE", "zero", 1);
  EXPECT_EQ(RunCli(base).code, kExitUsage);
}

TEST_F(CliTest, DualOfGdp) {
  std::ostringstream curve;
  ASSERT_TRUE(WriteCurveCsv(curve, *MakeCurve(GdpFamily{1.0})).ok());
  std::ofstream(Path("g.csv")) << curve.str();
  const auto r = RunCli({"dual", "--in", Path("g.csv"), "--eps-min", "0", "--eps-max", "2",
                         "--eps-grid", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "eps,delta");
  const double want[] = {0.38292492254802620728, 0.1269367375066439458,
                         0.02092363582111373142};
  for (double w : want) {
    std::getline(in, line);
    EXPECT_NEAR(std::stod(line.substr(line.find(',') + 1)), w, 1e-6) << line;
  }
}

TEST_F(CliTest, BenchReportsEveryMethodAndN) {
  const auto r = RunCli({"bench", "--pair", "laplace", "--param", "1", "--n-list", "2,3",
                         "--repeats", "1", "--grid", "201", "--eps-grid", "201"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "method,n,seconds");
  std::vector<std::string> keys;
  while (std::getline(in, line)) {
    keys.push_back(line.substr(0, line.rfind(',')));
    EXPECT_GT(std::stod(line.substr(line.rfind(',') + 1)), 0.0);
  }
  EXPECT_THAT(keys, ::testing::ElementsAre("clt,2", "clt,3", "edgeworth,2", "edgeworth,3",
                                           "exact,2", "exact,3"));
}

TEST_F(CliTest, TruncationWarningGoesToStderr) {
  const auto r = RunCli({"compose", "--pair", "gaussian", "--param", "2", "--n", "4",
                         "--method", "exact", "--grid", "101", "--eps-max", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.err, HasSubstr("warning"));
}

}  // namespace
}  // namespace fdp::cli
