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

#include <fstream>

#include "holo/cli.hpp"
#include "holo/errors.hpp"

namespace holo::cli {

using nlohmann::json;

Check make_check(std::string name, double measured, double threshold, std::string relation) {
  Check c{std::move(name), measured, threshold, std::move(relation), false};
  if (c.relation == "<=") {
    c.pass = measured <= threshold;
  } else if (c.relation == "<") {
    c.pass = measured < threshold;
  } else if (c.relation == ">") {
    c.pass = measured > threshold;
  } else if (c.relation == "==") {
    c.pass = measured == threshold;
  } else {
    throw ValidationError("unknown check relation '" + c.relation + "'");
  }
  return c;
}

GateBlock gate_block(const ComplexMatrix& u) {
  GateBlock b;
  b.dim = static_cast<int>(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) b.entries.push_back({u(i, j).real(), u(i, j).imag()});
  }
  return b;
}

ComplexMatrix gate_matrix(const GateBlock& block) {
  if (block.entries.size() != static_cast<std::size_t>(block.dim * block.dim)) {
    throw ValidationError("gate entry count does not match dim^2");
  }
  ComplexMatrix u(block.dim, block.dim);
  for (int i = 0; i < block.dim; ++i) {
    for (int j = 0; j < block.dim; ++j) {
      const auto& e = block.entries[i * block.dim + j];
      u(i, j) = Complex(e[0], e[1]);
    }
  }
  return u;
}

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

json to_json(const Report& r) {
  json doc;
  doc["config"] = r.config;
  doc["gate"] = nullptr;
  if (r.gate) doc["gate"] = {{"dim", r.gate->dim}, {"entries", r.gate->entries}};
  doc["phases"] = json::array();
  for (const auto& p : r.phases) {
    doc["phases"].push_back({{"label", p.label},
                             {"eigenvalue", p.eigenvalue},
                             {"alpha", p.alpha},
                             {"gamma_g", p.gamma_g},
                             {"gamma_d", p.gamma_d},
                             {"u1", p.u1}});
  }
  doc["schmidt"] = nullptr;
  if (r.schmidt) {
    doc["schmidt"] = {{"singular_values", r.schmidt->singular_values},
                      {"rank", r.schmidt->rank},
                      {"cnot_class", r.schmidt->cnot_class}};
  }
  doc["checks"] = json::array();
  for (const auto& c : r.checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"measured", c.measured},
                             {"threshold", c.threshold},
                             {"relation", c.relation},
                             {"pass", c.pass}});
  }
  doc["results"] = r.results;
  return doc;
}

Report report_from_json(const json& doc) {
  try {
    Report r;
    r.config = doc.at("config");
    if (!doc.at("gate").is_null()) {
      const auto& g = doc.at("gate");
      r.gate = GateBlock{g.at("dim").get<int>(),
                         g.at("entries").get<std::vector<std::array<double, 2>>>()};
    }
    for (const auto& p : doc.at("phases")) {
      r.phases.push_back({p.at("label").get<std::string>(), p.at("eigenvalue").get<double>(),
                          p.at("alpha").get<double>(), p.at("gamma_g").get<double>(),
                          p.at("gamma_d").get<double>(), p.at("u1").get<double>()});
    }
    if (!doc.at("schmidt").is_null()) {
      const auto& s = doc.at("schmidt");
      r.schmidt = SchmidtBlock{s.at("singular_values").get<std::array<double, 4>>(),
                               s.at("rank").get<int>(), s.at("cnot_class").get<bool>()};
    }
    for (const auto& c : doc.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("measured").get<double>(),
                          c.at("threshold").get<double>(), c.at("relation").get<std::string>(),
                          c.at("pass").get<bool>()});
    }
    if (doc.contains("results")) r.results = doc.at("results");
    return r;
  } catch (const json::out_of_range& e) {
    throw ValidationError(std::string("report is missing a key: ") + e.what());
  } catch (const json::type_error& e) {
    throw ValidationError(std::string("report has a mistyped field: ") + e.what());
  }
}

std::string emit_report(const Report& report) { return to_json(report).dump(2) + "\n"; }

void emit_report(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write report to '" + path + "'");
  out << emit_report(report);
}

Report parse_report(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed report document", line, column);
  }
  return report_from_json(doc);
}

}  // namespace holo::cli
