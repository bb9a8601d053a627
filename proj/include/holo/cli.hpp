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

#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "holo/model.hpp"
#include "holo/phases.hpp"

namespace holo::cli {

// Malformed config/report document; carries the 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A required key is absent from a config document.
class MissingKeyError : public std::runtime_error {
 public:
  explicit MissingKeyError(const std::string& key);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct RunConfig {
  std::string command;
  std::string preset;
  double omega = 1.0;
  std::optional<double> beta;
  std::optional<double> r;
  CouplingAxis axis = CouplingAxis::ZZ;
  std::string q;  // "value:duration,..."; durations may be written as "0.5T"
  int steps = 4096;
  std::map<std::string, double> tolerances;  // check name -> threshold
  std::string output_path;
  std::string format = "json";
  // sweep grid
  double r_min = 0.05;
  double r_max = 0.45;
  int points = 41;
  std::optional<double> detuning;  // D; defaults to omega / 2

  // All numeric fields finite, omega > 0, steps >= 64.
  void validate() const;
  Waveform waveform() const;
  double threshold(const std::string& check, double fallback) const;

  bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& doc);
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// One verified quantity. pass = (measured <relation> threshold).
struct Check {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  std::string relation = "<=";  // "<=", "<", ">", "=="
  bool pass = false;

  bool operator==(const Check&) const = default;
};

Check make_check(std::string name, double measured, double threshold, std::string relation = "<=");

struct GateBlock {
  int dim = 0;
  std::vector<std::array<double, 2>> entries;  // row-major [re, im]

  bool operator==(const GateBlock&) const = default;
};

GateBlock gate_block(const ComplexMatrix& u);
ComplexMatrix gate_matrix(const GateBlock& block);

struct SchmidtBlock {
  std::array<double, 4> singular_values{};
  int rank = 0;
  bool cnot_class = false;

  bool operator==(const SchmidtBlock&) const = default;
};

struct Report {
  nlohmann::json config = nlohmann::json::object();
  std::optional<GateBlock> gate;
  std::vector<PhaseRecord> phases;
  std::optional<SchmidtBlock> schmidt;
  std::vector<Check> checks;
  nlohmann::json results = nlohmann::json::object();

  bool all_pass() const;
  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& doc);
std::string emit_report(const Report& report);
void emit_report(const Report& report, const std::string& path);
Report parse_report(const std::string& text);

struct SweepRow {
  int index = 0;
  double r = 0.0;
  double J = 0.0;
  double D = 0.0;
  double Omega = 0.0;
  double gamma_d_max = 0.0;
  std::array<double, 4> schmidt{};
  int rank = 0;
  bool cnot_class = false;
};

// Evaluates the grid on `threads` workers; rows come back sorted by index.
std::vector<SweepRow> run_sweep(const RunConfig& config, int threads);
std::string sweep_csv(const std::vector<SweepRow>& rows);
// HF_THREADS if set and positive, else hardware concurrency.
int sweep_thread_count();

// Exit status: 0 all checks pass, 1 a check failed, 2 usage or validation
// error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_command(int argc, char** argv);

}  // namespace holo::cli
