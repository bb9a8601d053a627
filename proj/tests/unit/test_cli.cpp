// Copyright 2026 The holonomic-gates Authors
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

#include "holo/cli.hpp"

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "holo/errors.hpp"

namespace holo::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Solve2qFindsEntanglerRatio) {
  const auto res = run({"solve2q", "--omega", "1"});
  ASSERT_EQ(res.code, 0) << res.err;
  const Report rep = parse_report(res.out);
  EXPECT_NEAR(rep.results.at("r").get<double>(), 0.3187, 5e-4);
  EXPECT_DOUBLE_EQ(rep.results.at("D").get<double>(), 0.5);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"gate1q", "--beta", "0"}).code, 2);
  EXPECT_EQ(run({"gate1q", "--beta", "1.5707963267948966"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--preset", "no-such-preset"}).code, 2);
  EXPECT_EQ(run({"verify", "--preset", "one-qubit-pi4"}).code, 0);
}

TEST(Cli, FailedCheckExitsOneAndNamesIt) {
  const auto res = run({"gate1q", "--beta", "0.7", "--tol", "gate_vs_propagator=1e-30"});
  EXPECT_EQ(res.code, 1);
  EXPECT_NE(res.err.find("gate_vs_propagator"), std::string::npos) << res.err;
}

TEST(Cli, BinaryRunsAsProcess) {
  const std::string bin = HOLO_GATES_BIN;
  EXPECT_EQ(std::system((bin + " verify --preset one-qubit-pi4 > /dev/null").c_str()), 0);
  EXPECT_NE(std::system((bin + " gate1q --beta 0 > /dev/null 2>&1").c_str()), 0);
}

TEST(Cli, Gate1qReportsUnitaryGate) {
  const auto res = run({"gate1q", "--beta", "0.7853981633974483"});
  ASSERT_EQ(res.code, 0) << res.err;
  const Report rep = parse_report(res.out);
  ASSERT_TRUE(rep.gate.has_value());
  EXPECT_EQ(rep.gate->dim, 2);
  EXPECT_LT(unitarity_defect(gate_matrix(*rep.gate)), 1e-12);
  EXPECT_EQ(rep.phases.size(), 2u);
}

TEST(Config, MinimalDocument) {
  const RunConfig c = parse_config(R"({"omega": 2.0})");
  EXPECT_DOUBLE_EQ(c.omega, 2.0);
  EXPECT_EQ(c.steps, 4096);
  EXPECT_EQ(c.axis, CouplingAxis::ZZ);
  EXPECT_FALSE(c.beta.has_value());
  EXPECT_EQ(config_from_json(to_json(c)), c);
}

TEST(Config, FullDocumentRoundTrips) {
  RunConfig c = parse_config(R"({"omega": 1.5, "r": 0.3, "axis": "xx", "q": "1:0.5T,0:0.5T",
                                  "steps": 128, "tolerances": {"unitarity": 1e-9}})");
  EXPECT_EQ(c.axis, CouplingAxis::XX);
  EXPECT_DOUBLE_EQ(c.threshold("unitarity", 1.0), 1e-9);
  EXPECT_DOUBLE_EQ(c.threshold("other", 0.5), 0.5);
  EXPECT_NEAR(c.waveform().period(), 2 * 3.141592653589793 / 1.5, 1e-15);
  EXPECT_EQ(config_from_json(to_json(c)), c);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config(R"({"omega": 1.0, "steps": 8})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"omega": -1.0})"), ValidationError);
  EXPECT_THROW(parse_config(R"({"omega": "fast"})"), ValidationError);
  try {
    parse_config("{\n  \"omega\": 1.0,\n  \"steps\": ]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
  try {
    parse_config(R"({"steps": 128})");
    FAIL() << "expected MissingKeyError";
  } catch (const MissingKeyError& e) {
    EXPECT_EQ(e.key(), "omega");
  }
  EXPECT_THROW(load_config("/nonexistent/config.json"), ValidationError);
}

TEST(Config, FileDrivesCommand) {
  const auto path = std::filesystem::temp_directory_path() / "holo_cli_config_test.json";
  {
    std::ofstream f(path);
    f << R"({"omega": 1.0, "beta": 0.5, "steps": 1024})";
  }
  const auto res = run({"gate1q", "--config", path.string()});
  EXPECT_EQ(res.code, 0) << res.err;
  std::filesystem::remove(path);
}

TEST(Report, Gate2qRoundTripIsExact) {
  const auto path = std::filesystem::temp_directory_path() / "holo_cli_report_test.json";
  const auto res = run({"gate2q", "--r", "0.25", "--q", "0.3:0.5T,-0.1:0.5T", "--steps", "512",
                        "--out", path.string()});
  ASSERT_EQ(res.code, 0) << res.err;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const Report rep = parse_report(text.str());
  ASSERT_TRUE(rep.gate.has_value());
  ASSERT_TRUE(rep.schmidt.has_value());
  EXPECT_EQ(rep.phases.size(), 4u);
  EXPECT_EQ(parse_report(emit_report(rep)), rep);
  EXPECT_EQ(emit_report(parse_report(emit_report(rep))), emit_report(rep));
  std::filesystem::remove(path);
}

TEST(Report, Checks) {
  EXPECT_TRUE(make_check("a", 1e-9, 1e-8).pass);
  EXPECT_FALSE(make_check("a", 1e-7, 1e-8).pass);
  EXPECT_TRUE(make_check("a", 2.0, 1.0, ">").pass);
  EXPECT_FALSE(make_check("a", 1.0, 1.0, "<").pass);
  EXPECT_TRUE(make_check("a", 4.0, 4.0, "==").pass);
  EXPECT_THROW(make_check("a", 1.0, 1.0, "~"), ValidationError);
}

TEST(Sweep, StableAcrossThreadCounts) {
  RunConfig c;
  c.command = "sweep";
  c.points = 9;
  c.steps = 128;
  const auto one = run_sweep(c, 1);
  const auto many = run_sweep(c, 4);
  ASSERT_EQ(one.size(), 9u);
  EXPECT_EQ(sweep_csv(one), sweep_csv(many));
  for (int k = 0; k < 9; ++k) EXPECT_EQ(one[k].index, k);
  EXPECT_DOUBLE_EQ(one.front().r, 0.05);
  EXPECT_DOUBLE_EQ(one.back().r, 0.45);
}

TEST(Sweep, CsvColumns) {
  RunConfig c;
  c.points = 3;
  c.steps = 64;
  const std::string csv = sweep_csv(run_sweep(c, 2));
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "index,r,J,D,Omega,gamma_d_max,D1,D2,D3,D4,rank,cnot_class");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.empty()) continue;
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 11);
  }
  EXPECT_EQ(rows, 3);
  const auto res = run({"sweep", "--points", "5", "--steps", "64", "--format", "csv"});
  EXPECT_EQ(res.code, 0) << res.err;
  EXPECT_EQ(res.out.rfind("index,r,J", 0), 0u);
}

}  // namespace
}  // namespace holo::cli
