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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "holo/cli.hpp"
#include "holo/entangle.hpp"
#include "holo/errors.hpp"
#include "holo/gates.hpp"
#include "holo/propagator.hpp"

namespace holo::cli {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

// Default thresholds of the named checks; --tol NAME=VAL overrides.
const std::map<std::string, double>& default_thresholds() {
  static const std::map<std::string, double> t{
      {"condition_residual", 1e-14},
      {"invariant_residual", 1e-12},
      {"invariant_drift", 1e-8},
      {"dynamical_phase", 1e-8},
      {"lr_closed_form", 1e-8},
      {"gate_vs_propagator", 1e-8},
      {"reconstruct_vs_propagator", 1e-8},
      {"offdiagonal_connection", 1e-8},
      {"cyclic_return", 1e-8},
      {"unitarity", 1e-12},
      {"entangler_residual", 1e-12},
      {"schmidt_vs_closed_form", 1e-8},
      {"local_equivalence", 1e-8},
  };
  return t;
}

double tol_for(const RunConfig& c, const std::string& name) {
  return c.threshold(name, default_thresholds().at(name));
}

SchmidtBlock schmidt_block(const SchmidtReport& rep) {
  return {rep.singular_values, rep.rank, rep.cnot_class};
}

double makhlin_gap(const ComplexMatrix& u, const ComplexMatrix& v) {
  const auto a = makhlin_invariants(u);
  const auto b = makhlin_invariants(v);
  return std::max({std::abs(a.g1 - b.g1), std::abs(a.g2 - b.g2), std::abs(a.g3 - b.g3)});
}

json makhlin_json(const ComplexMatrix& u) {
  const auto m = makhlin_invariants(u);
  return json::array({m.g1, m.g2, m.g3});
}

double require_beta(const RunConfig& c) {
  if (!c.beta) throw MissingKeyError("beta");
  return *c.beta;
}

double ratio_or_solved(const RunConfig& c) { return c.r ? *c.r : entangler_ratio(); }

double max_invariant_residual(const InvariantEigensystem& sys, int points) {
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    const double t = sys.period() * k / points;
    worst = std::max(worst, std::visit([t](const auto& p) { return invariant_residual_exact(p, t); },
                                       sys.params()));
  }
  return worst;
}

double max_offdiagonal(const InvariantEigensystem& sys, int points) {
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    worst = std::max(worst, offdiagonal_connection_residual(sys, sys.period() * k / points));
  }
  return worst;
}

void add_phase_checks(Report& rep, const RunConfig& c, const InvariantEigensystem& sys) {
  rep.phases = phase_table(sys, c.steps);
  double worst_d = 0.0, worst_lr = 0.0;
  for (int n = 0; n < sys.size(); ++n) {
    worst_d = std::max(worst_d, std::abs(rep.phases[n].gamma_d));
    worst_lr = std::max(worst_lr, std::abs(rep.phases[n].alpha - sys.lr_phase(n, sys.period())));
  }
  rep.checks.push_back(make_check("dynamical_phase", worst_d, tol_for(c, "dynamical_phase")));
  rep.checks.push_back(make_check("lr_closed_form", worst_lr, tol_for(c, "lr_closed_form")));
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

Report cmd_solve1q(const RunConfig& c) {
  Report rep;
  const double beta = require_beta(c);
  const OneQubitParams p = solve_one_qubit_params(beta, c.omega);
  const double residual = one_qubit_condition_residual(p);
  const double product = adiabaticity_product(p);
  rep.results = {{"beta", beta},         {"omega", p.omega},
                 {"Delta", p.Delta},     {"Omega", p.Omega},
                 {"T", p.period()},      {"condition_residual", residual},
                 {"adiabaticity_product", product}};
  rep.checks.push_back(make_check("condition_residual", std::abs(residual) / (c.omega * c.omega),
                                  tol_for(c, "condition_residual")));
  rep.checks.push_back(make_check("non_adiabatic", product, 2.0 * kPi, "<"));
  return rep;
}

Report cmd_gate1q(const RunConfig& c) {
  Report rep;
  const GateSpec g = make_one_qubit_gate(require_beta(c), c.omega);
  rep.gate = gate_block(g.U);
  rep.results = {{"beta", g.beta}, {"Delta", g.one.Delta}, {"Omega", g.one.Omega},
                 {"omega", g.omega}, {"T", g.T}};
  const auto prop = propagate(g.one, 0.0, g.T, c.steps);
  rep.checks.push_back(make_check("gate_vs_propagator", unitary_distance(g.U, prop.U),
                                  tol_for(c, "gate_vs_propagator")));
  rep.checks.push_back(make_check("unitarity", unitarity_defect(g.U), tol_for(c, "unitarity")));
  add_phase_checks(rep, c, InvariantEigensystem(g.one));
  return rep;
}

Report cmd_solve2q(const RunConfig& c) {
  Report rep;
  const auto roots = find_entangler_roots(512, 1e-12);
  json rows = json::array();
  std::optional<double> canonical;
  for (const auto& root : roots) {
    rows.push_back({{"r", root.r},
                    {"residual", root.residual},
                    {"reproduces_cnot_values", root.reproduces_cnot_values}});
    if (root.reproduces_cnot_values && !canonical) canonical = root.r;
  }
  rep.results["roots"] = rows;
  if (!canonical) {
    rep.checks.push_back(make_check("entangler_root_found", 0.0, 1.0, "=="));
    return rep;
  }
  const TwoQubitParams p = solve_two_qubit_params(c.omega, *canonical, {}, c.axis);
  rep.results["r"] = *canonical;
  rep.results["J"] = p.J;
  rep.results["D"] = p.D;
  rep.results["Omega"] = p.Omega;
  rep.results["omega"] = p.omega;
  rep.results["T"] = p.period();
  rep.checks.push_back(make_check("entangler_residual", std::abs(entangler_function(*canonical)),
                                  tol_for(c, "entangler_residual")));
  rep.checks.push_back(make_check("condition_residual", two_qubit_condition_residual(p),
                                  tol_for(c, "condition_residual")));
  return rep;
}

Report cmd_gate2q(const RunConfig& c) {
  Report rep;
  const double r = ratio_or_solved(c);
  const GateSpec g = make_two_qubit_gate(c.omega, r, c.waveform(), c.axis);
  rep.gate = gate_block(g.U);
  rep.results = {{"r", r},        {"J", g.two.J},          {"D", g.two.D},
                 {"Omega", g.two.Omega}, {"omega", g.omega}, {"T", g.T},
                 {"axis", to_string(c.axis)}, {"q", g.two.q.to_string()}};
  const auto schmidt = schmidt_coefficients(g.U);
  rep.schmidt = schmidt_block(schmidt);
  const auto prop = propagate(g.two, 0.0, g.T, c.steps);
  rep.checks.push_back(make_check("gate_vs_propagator", unitary_distance(g.U, prop.U),
                                  tol_for(c, "gate_vs_propagator")));
  rep.checks.push_back(make_check("unitarity", unitarity_defect(g.U), tol_for(c, "unitarity")));
  const auto [dp, dm] = entangler_schmidt_values(r);
  const double gap = std::max(std::abs(schmidt.singular_values[0] - dp),
                              std::abs(schmidt.singular_values[1] - dm));
  rep.checks.push_back(make_check("schmidt_vs_closed_form", gap, tol_for(c, "schmidt_vs_closed_form")));
  add_phase_checks(rep, c, InvariantEigensystem(g.two));
  return rep;
}

void verify_common(Report& rep, const RunConfig& c, const InvariantEigensystem& sys,
                   const ComplexMatrix& gate) {
  const double T = sys.period();
  rep.gate = gate_block(gate);
  rep.checks.push_back(make_check("invariant_residual", max_invariant_residual(sys, 1024),
                                  tol_for(c, "invariant_residual")));
  const auto prop = std::visit([&](const auto& p) { return propagate(p, 0.0, T, c.steps); },
                               sys.params());
  rep.checks.push_back(make_check("gate_vs_propagator", unitary_distance(gate, prop.U),
                                  tol_for(c, "gate_vs_propagator")));
  rep.checks.push_back(make_check("reconstruct_vs_propagator",
                                  unitary_distance(reconstruct_evolution(sys, T), prop.U),
                                  tol_for(c, "reconstruct_vs_propagator")));
  StateVector psi0 = StateVector::Zero(sys.dim());
  psi0(0) = 1.0;
  const double drift = std::visit(
      [&](const auto& p) { return invariant_expectation_drift(p, psi0, c.steps); }, sys.params());
  rep.checks.push_back(make_check("invariant_drift", drift, tol_for(c, "invariant_drift")));
  add_phase_checks(rep, c, sys);
  rep.checks.push_back(make_check("offdiagonal_connection", max_offdiagonal(sys, 256),
                                  tol_for(c, "offdiagonal_connection")));
  double worst_return = 0.0;
  for (int n = 0; n < sys.size(); ++n) {
    worst_return = std::max(worst_return, cyclic_return_error(sys, n, c.steps));
  }
  rep.checks.push_back(make_check("cyclic_return", worst_return, tol_for(c, "cyclic_return")));
}

Report cmd_verify(const RunConfig& c) {
  Report rep;
  const std::string& preset = c.preset;
  if (preset == "swap-reference") {
    const ComplexMatrix swap = named::swap();
    const auto s = schmidt_coefficients(swap);
    rep.gate = gate_block(swap);
    rep.schmidt = schmidt_block(s);
    rep.results["makhlin"] = makhlin_json(swap);
    rep.checks.push_back(make_check("schmidt_rank", s.rank, 4.0, "=="));
    rep.checks.push_back(make_check("cnot_class", s.cnot_class ? 1.0 : 0.0, 0.0, "=="));
    rep.checks.push_back(make_check("makhlin_gap_to_cnot", makhlin_gap(swap, named::cnot()),
                                    tol_for(c, "local_equivalence"), ">"));
    return rep;
  }
  if (c.beta) {
    const GateSpec g = make_one_qubit_gate(*c.beta, c.omega);
    rep.results = {{"beta", g.beta}, {"Delta", g.one.Delta}, {"Omega", g.one.Omega},
                   {"omega", g.omega}, {"T", g.T}};
    verify_common(rep, c, InvariantEigensystem(g.one), g.U);
    rep.checks.push_back(make_check("non_adiabatic", adiabaticity_product(g.one), 2.0 * kPi, "<"));
    return rep;
  }
  const double r = ratio_or_solved(c);
  const GateSpec g = make_two_qubit_gate(c.omega, r, c.waveform(), c.axis);
  rep.results = {{"r", r}, {"J", g.two.J}, {"D", g.two.D}, {"Omega", g.two.Omega},
                 {"omega", g.omega}, {"T", g.T}, {"axis", to_string(c.axis)}};
  verify_common(rep, c, InvariantEigensystem(g.two), g.U);
  const auto s = schmidt_coefficients(g.U);
  rep.schmidt = schmidt_block(s);
  rep.checks.push_back(make_check("schmidt_rank", s.rank, 2.0, "=="));
  if (!c.r) {
    rep.checks.push_back(make_check("cnot_class", s.cnot_class ? 1.0 : 0.0, 1.0, "=="));
    rep.checks.push_back(make_check("local_equivalence", makhlin_gap(g.U, named::yy_entangler()),
                                    tol_for(c, "local_equivalence")));
  }
  return rep;
}

Report cmd_entangler(const RunConfig& c) {
  Report rep;
  const double r = ratio_or_solved(c);
  const GateSpec g = make_two_qubit_gate(c.omega, r, c.waveform(), c.axis);
  const auto s = schmidt_coefficients(g.U);
  rep.gate = gate_block(g.U);
  rep.schmidt = schmidt_block(s);
  rep.results = {{"r", r},
                 {"makhlin", makhlin_json(g.U)},
                 {"makhlin_cnot", makhlin_json(named::cnot())},
                 {"makhlin_yy", makhlin_json(named::yy_entangler())}};
  rep.checks.push_back(make_check("schmidt_rank", s.rank, 2.0, "=="));
  rep.checks.push_back(make_check("cnot_class", s.cnot_class ? 1.0 : 0.0, 1.0, "=="));
  rep.checks.push_back(make_check("local_equivalence", makhlin_gap(g.U, named::yy_entangler()),
                                  tol_for(c, "local_equivalence")));
  rep.checks.push_back(make_check("local_equivalence_cnot", makhlin_gap(g.U, named::cnot()),
                                  tol_for(c, "local_equivalence")));
  return rep;
}

void apply_preset(RunConfig& c) {
  if (c.preset.empty()) return;
  if (c.preset == "one-qubit-pi4") {
    if (!c.beta) c.beta = kPi / 4.0;
  } else if (c.preset == "two-qubit-entangler") {
    c.axis = CouplingAxis::ZZ;
  } else if (c.preset == "two-qubit-entangler-xx") {
    c.axis = CouplingAxis::XX;
  } else if (c.preset != "swap-reference") {
    throw ValidationError("unknown preset '" + c.preset +
                          "' (one-qubit-pi4, two-qubit-entangler, two-qubit-entangler-xx, "
                          "swap-reference)");
  }
}

void write_output(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output_path);
  if (!file) throw ValidationError("cannot write '" + c.output_path + "'");
  file << text;
}

int finish(const Report& rep, const RunConfig& c, std::ostream& out, std::ostream& err) {
  write_output(c, emit_report(rep), out);
  int status = 0;
  for (const auto& check : rep.checks) {
    if (!check.pass) {
      err << "check failed: " << check.name << " measured " << std::setprecision(17)
          << check.measured << " (required " << check.relation << " " << check.threshold
          << ")\n";
      status = 1;
    }
  }
  return status;
}

std::pair<std::string, double> parse_tol(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ValidationError("--tol expects NAME=VALUE");
  try {
    std::size_t used = 0;
    const std::string v = text.substr(eq + 1);
    const double value = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return {text.substr(0, eq), value};
  } catch (const std::logic_error&) {
    throw ValidationError("--tol value in '" + text + "' is not numeric");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

int sweep_thread_count() {
  if (const char* env = std::getenv("HF_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const RunConfig& c, int threads) {
  c.validate();
  if (!(c.r_min < 0.5 && c.r_max < 0.5 && c.r_min > -0.5 && c.r_max > -0.5)) {
    throw ValidationError("sweep bounds must lie inside (-1/2, 1/2)");
  }
  const Waveform q = c.waveform();
  std::vector<SweepRow> rows(c.points);
  auto evaluate = [&](int k) {
    const double r = c.points == 1 ? c.r_min : c.r_min + (c.r_max - c.r_min) * k / (c.points - 1);
    TwoQubitParams p = solve_two_qubit_params(c.omega, r, q, c.axis);
    if (c.detuning) p.D = *c.detuning;
    const InvariantEigensystem sys(p);
    SweepRow row;
    row.index = k;
    row.r = r;
    row.J = p.J;
    row.D = p.D;
    row.Omega = p.Omega;
    for (int n = 0; n < sys.size(); ++n) {
      row.gamma_d_max = std::max(row.gamma_d_max, std::abs(phase_split(sys, n, c.steps).gamma_d));
    }
    const auto s = schmidt_coefficients(reconstruct_evolution(sys, sys.period()));
    row.schmidt = s.singular_values;
    row.rank = s.rank;
    row.cnot_class = s.cnot_class;
    rows[k] = row;
  };
  threads = std::clamp(threads, 1, c.points);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int k = w; k < c.points; k += threads) evaluate(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "index,r,J,D,Omega,gamma_d_max,D1,D2,D3,D4,rank,cnot_class\n";
  for (const auto& row : rows) {
    os << row.index << ',' << row.r << ',' << row.J << ',' << row.D << ',' << row.Omega << ','
       << row.gamma_d_max;
    for (double s : row.schmidt) os << ',' << s;
    os << ',' << row.rank << ',' << (row.cnot_class ? 1 : 0) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-adiabatic holonomic gate construction and verification", "holo_gates"};
  app.require_subcommand(1);

  struct Flags {
    std::string config_path, preset, axis, q, out, format;
    double omega = 1.0, beta = 0.0, r = 0.0, r_min = 0.0, r_max = 0.0, detuning = 0.0;
    int steps = 0, points = 0;
    std::vector<std::string> tols;
  } f;
  std::map<std::string, CLI::Option*> opts;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"solve1q", "one-qubit parameters from beta (vanishing dynamical phase)"},
      {"gate1q", "one-qubit gate U_beta with a propagator cross-check"},
      {"solve2q", "roots of the perfect-entangler condition and two-qubit parameters"},
      {"gate2q", "two-qubit gate, Schmidt report and phases"},
      {"verify", "full invariant/phase/gate verification suite"},
      {"sweep", "dynamical-phase magnitude and Schmidt values over an r grid"},
      {"entangler", "certify CNOT-class equivalence of the two-qubit gate"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs.push_back(sub);
    // Each subcommand owns its own option objects; record them per name.
    auto reg = [&](CLI::Option* o, const std::string& key) { opts[name + key] = o; };
    reg(sub->add_option("--config", f.config_path, "JSON config file"), "config");
    reg(sub->add_option("--preset", f.preset, "bundled parameter set"), "preset");
    reg(sub->add_option("--omega", f.omega, "drive angular frequency"), "omega");
    reg(sub->add_option("--beta", f.beta, "one-qubit gate parameter in (0, pi/2)"), "beta");
    reg(sub->add_option("--r", f.r, "ratio J/omega"), "r");
    reg(sub->add_option("--axis", f.axis, "coupling axis: zz or xx"), "axis");
    reg(sub->add_option("--q", f.q, "u(1) waveform value:duration,... (duration may end in T)"),
        "q");
    reg(sub->add_option("--steps", f.steps, "time steps per period (>= 64)"), "steps");
    reg(sub->add_option("--tol", f.tols, "override a check threshold, NAME=VALUE"), "tol");
    reg(sub->add_option("--out", f.out, "write the report here instead of stdout"), "out");
    reg(sub->add_option("--format", f.format, "json or csv (sweep only)"), "format");
    reg(sub->add_option("--r-min", f.r_min, "sweep lower bound"), "r_min");
    reg(sub->add_option("--r-max", f.r_max, "sweep upper bound"), "r_max");
    reg(sub->add_option("--points", f.points, "sweep grid size"), "points");
    reg(sub->add_option("--detuning", f.detuning, "sweep: override D"), "detuning");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    auto given = [&](const std::string& key) { return opts.at(name + key)->count() > 0; };

    RunConfig c;
    if (given("config")) c = load_config(f.config_path);
    c.command = name;
    if (given("preset")) c.preset = f.preset;
    if (given("omega")) c.omega = f.omega;
    if (given("beta")) c.beta = f.beta;
    if (given("r")) c.r = f.r;
    if (given("axis")) c.axis = parse_axis(f.axis);
    if (given("q")) c.q = f.q;
    if (given("steps")) c.steps = f.steps;
    for (const auto& t : f.tols) c.tolerances.insert_or_assign(parse_tol(t).first, parse_tol(t).second);
    if (given("out")) c.output_path = f.out;
    if (given("format")) c.format = f.format;
    if (given("r_min")) c.r_min = f.r_min;
    if (given("r_max")) c.r_max = f.r_max;
    if (given("points")) c.points = f.points;
    if (given("detuning")) c.detuning = f.detuning;
    apply_preset(c);
    c.validate();
    if (c.format == "csv" && name != "sweep") {
      throw ValidationError("--format csv is only available for sweep");
    }

    if (name == "sweep") {
      const auto rows = run_sweep(c, sweep_thread_count());
      if (c.format == "csv") {
        write_output(c, sweep_csv(rows), out);
        return 0;
      }
      Report rep;
      rep.config = to_json(c);
      json table = json::array();
      for (const auto& row : rows) {
        table.push_back({{"index", row.index}, {"r", row.r}, {"J", row.J}, {"D", row.D},
                         {"Omega", row.Omega}, {"gamma_d_max", row.gamma_d_max},
                         {"schmidt", row.schmidt}, {"rank", row.rank},
                         {"cnot_class", row.cnot_class}});
      }
      rep.results["rows"] = table;
      return finish(rep, c, out, err);
    }

    Report rep;
    if (name == "solve1q") rep = cmd_solve1q(c);
    else if (name == "gate1q") rep = cmd_gate1q(c);
    else if (name == "solve2q") rep = cmd_solve2q(c);
    else if (name == "gate2q") rep = cmd_gate2q(c);
    else if (name == "verify") rep = cmd_verify(c);
    else rep = cmd_entangler(c);
    rep.config = to_json(c);
    return finish(rep, c, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MissingKeyError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_command(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace holo::cli
