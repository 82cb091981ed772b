// Copyright 2026 The qprog Authors
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
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the CLI with the given arguments, capturing stdout and stderr.
CliRun invoke(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("qprog_cli_err_" + std::to_string(::getpid()));
  const std::string cmd = std::string(QPROG_CLI_PATH) + " " + args + " 2>" + err_path.string();
  CliRun r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(err_path);
  return r;
}

std::string data(const std::string& name) { return std::string(QPROG_TEST_DATA_DIR) + "/" + name; }

nlohmann::json manifest(const CliRun& r) {
  const auto at = r.err.rfind("{\"manifest\"");
  return nlohmann::json::parse(r.err.substr(at))["manifest"];
}

TEST(Cli, LowerBoundExample) {
  const CliRun r = invoke("bounds lower --n-qubits 100 --eps 0.005 --varpi 0.3 --kappa 1e-6");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["value"]["value"].get<double>(), 17.2, 0.05);
  EXPECT_EQ(doc["value"]["units"], "bits");
}

TEST(Cli, InvalidEpsilonExitsOne) {
  const CliRun r = invoke("program --circuit " + data("brick_line_n8_d4.json") + " --eps 2.0");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("InvalidEpsilon"), std::string::npos);
}

TEST(Cli, VerifyReprPrintsCounts) {
  const CliRun r = invoke("verify --suite repr");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["all_passed"].get<bool>());
  EXPECT_GT(doc["checks"]["repr"]["cauchy_identity"]["total"].get<int>(), 0);
  EXPECT_GT(doc["checks"]["repr"]["binomial_lower_bound"]["total"].get<int>(), 0);
}

TEST(Cli, StochasticCommandsNeedSeed) {
  EXPECT_EQ(invoke("mosim estimate-p --n 1 --samples 2000").code, 1);
  EXPECT_EQ(invoke("circuit random --n 4 --depth 2 --k 2").code, 1);
  EXPECT_EQ(invoke("verify --suite mosim").code, 1);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke("").code, 1);
  EXPECT_EQ(invoke("frobnicate").code, 1);
  EXPECT_EQ(invoke("bounds upper --n-qubits x").code, 1);
}

TEST(Cli, ByteIdenticalReruns) {
  const std::vector<std::string> cases{
       "--seed 5 mosim estimate-p --n 1 --samples 2000",
        "--seed 9 circuit random --n 6 --depth 3 --k 2 --geometry complete",
        "--seed 3 program --circuit " + data("random_k1_n4.json") + " --eps 0.5",
        "sweep --kind tightness --from 6 --to 9"};
  for (const std::string& args : cases) {
    const CliRun a = invoke(args);
    const CliRun b = invoke(args);
    ASSERT_EQ(a.code, 0) << args << "\n" << a.err;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(manifest(a)["stdout_fnv1a"], manifest(b)["stdout_fnv1a"]);
  }
}

TEST(Cli, ManifestDescribesRun) {
  const CliRun r = invoke("--seed 17 bounds upper --n-qubits 16 --k 2 --ell 32 --eps 0.1");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = manifest(r);
  EXPECT_EQ(m["seed"], 17);
  EXPECT_EQ(m["exit_code"], 0);
  EXPECT_TRUE(m.contains("version"));
  EXPECT_TRUE(m.contains("wall_time_s"));
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["value"]["value"].get<double>(), 12477.0, 0.5);
}

TEST(Cli, SweepWritesCsv) {
  const auto path = std::filesystem::temp_directory_path() / "qprog_cli_sweep.csv";
  const CliRun r = invoke("sweep --kind tradeoff --from 4 --to 8 --csv " + path.string());
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "N,W,primitive_bits,reduced_bits,ratio");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 5);
  std::filesystem::remove(path);
}

TEST(Cli, LightconeDecomposeFixture) {
  const CliRun r = invoke("lightcone decompose --circuit " + data("brick_line_n8_d4.json") + " --w 2");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["cones"].size(), 7u);
}

}  // namespace
