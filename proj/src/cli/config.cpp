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

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "holo/cli.hpp"
#include "holo/errors.hpp"

namespace holo::cli {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

MissingKeyError::MissingKeyError(const std::string& key)
    : std::runtime_error("missing required key '" + key + "'"), key_(key) {}

namespace {

void require_finite(const char* name, double v) {
  if (!std::isfinite(v)) throw ValidationError(std::string(name) + " must be finite");
}

// Byte offset -> 1-based line/column.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

template <typename T>
T get_typed(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::type_error&) {
    throw ValidationError(std::string("config key '") + key + "' has the wrong type");
  }
}

}  // namespace

void RunConfig::validate() const {
  require_finite("omega", omega);
  if (omega <= 0.0) throw ValidationError("omega must be positive");
  if (beta) require_finite("beta", *beta);
  if (r) require_finite("r", *r);
  if (detuning) require_finite("detuning", *detuning);
  require_finite("r_min", r_min);
  require_finite("r_max", r_max);
  for (const auto& [name, value] : tolerances) require_finite(name.c_str(), value);
  if (steps < kMinPhaseSteps) throw ValidationError("steps must be >= 64");
  if (points < 1) throw ValidationError("points must be >= 1");
  if (format != "json" && format != "csv") throw ValidationError("format must be json or csv");
}

Waveform RunConfig::waveform() const { return Waveform::parse(q, 2.0 * std::numbers::pi / omega); }

double RunConfig::threshold(const std::string& check, double fallback) const {
  const auto it = tolerances.find(check);
  return it == tolerances.end() ? fallback : it->second;
}

json to_json(const RunConfig& c) {
  json doc = {{"command", c.command},
              {"preset", c.preset},
              {"omega", c.omega},
              {"axis", to_string(c.axis)},
              {"q", c.q},
              {"steps", c.steps},
              {"tolerances", c.tolerances},
              {"output_path", c.output_path},
              {"format", c.format},
              {"r_min", c.r_min},
              {"r_max", c.r_max},
              {"points", c.points}};
  if (c.beta) doc["beta"] = *c.beta;
  if (c.r) doc["r"] = *c.r;
  if (c.detuning) doc["detuning"] = *c.detuning;
  return doc;
}

RunConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("config document must be an object");
  if (!doc.contains("omega")) throw MissingKeyError("omega");
  RunConfig c;
  c.omega = get_typed<double>(doc, "omega");
  if (doc.contains("command")) c.command = get_typed<std::string>(doc, "command");
  if (doc.contains("preset")) c.preset = get_typed<std::string>(doc, "preset");
  if (doc.contains("beta")) c.beta = get_typed<double>(doc, "beta");
  if (doc.contains("r")) c.r = get_typed<double>(doc, "r");
  if (doc.contains("axis")) c.axis = parse_axis(get_typed<std::string>(doc, "axis"));
  if (doc.contains("q")) c.q = get_typed<std::string>(doc, "q");
  if (doc.contains("steps")) c.steps = get_typed<int>(doc, "steps");
  if (doc.contains("tolerances")) {
    c.tolerances = get_typed<std::map<std::string, double>>(doc, "tolerances");
  }
  if (doc.contains("output_path")) c.output_path = get_typed<std::string>(doc, "output_path");
  if (doc.contains("format")) c.format = get_typed<std::string>(doc, "format");
  if (doc.contains("r_min")) c.r_min = get_typed<double>(doc, "r_min");
  if (doc.contains("r_max")) c.r_max = get_typed<double>(doc, "r_max");
  if (doc.contains("points")) c.points = get_typed<int>(doc, "points");
  if (doc.contains("detuning")) c.detuning = get_typed<double>(doc, "detuning");
  c.validate();
  return c;
}

RunConfig parse_config(const std::string& text) {
  try {
    return config_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte);
    throw ParseError("malformed config document", line, column);
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace holo::cli
