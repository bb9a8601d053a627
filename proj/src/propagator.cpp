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

#include "holo/propagator.hpp"

#include <algorithm>
#include <cmath>

#include "holo/errors.hpp"

namespace holo {

namespace {

constexpr int kMinSteps = 16;

ComplexMatrix step_midpoint(const MatrixFunction& h, double t, double dt) {
  const ComplexMatrix hm = h(t + 0.5 * dt);
  require_hermitian(hm);
  return exp_i_hermitian(hm, -dt);
}

ComplexMatrix step_magnus4(const MatrixFunction& h, double t, double dt) {
  static const double kNode = std::sqrt(3.0) / 6.0;
  static const double kA1 = 0.25 + kNode;
  static const double kA2 = 0.25 - kNode;
  const ComplexMatrix h1 = h(t + (0.5 - kNode) * dt);
  const ComplexMatrix h2 = h(t + (0.5 + kNode) * dt);
  require_hermitian(h1);
  require_hermitian(h2);
  const ComplexMatrix first = exp_i_hermitian(kA1 * h1 + kA2 * h2, -dt);
  const ComplexMatrix second = exp_i_hermitian(kA2 * h1 + kA1 * h2, -dt);
  return second * first;
}

// Partition [t0, t1] at the breakpoints and give each piece a share of the
// step budget proportional to its length (at least one step).
std::vector<std::pair<double, int>> plan_pieces(double t0, double t1, int steps,
                                                std::vector<double> breaks) {
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> edges{t0};
  for (double b : breaks) {
    if (b > edges.back() && b < t1) edges.push_back(b);
  }
  edges.push_back(t1);
  std::vector<std::pair<double, int>> pieces;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double len = edges[i + 1] - edges[i];
    const int n = std::max(1, static_cast<int>(std::lround(steps * len / (t1 - t0))));
    pieces.emplace_back(len, n);
  }
  return pieces;
}

}  // namespace

PropagationResult propagate(const MatrixFunction& hamiltonian, double t0, double t1,
                            const PropagationOptions& options) {
  if (options.steps < kMinSteps) throw ValidationError("propagate: steps must be >= 16");
  if (!(t1 > t0)) throw ValidationError("propagate: t1 must exceed t0");

  const ComplexMatrix h0 = hamiltonian(t0);
  require_hermitian(h0);
  PropagationResult out;
  out.U = ComplexMatrix::Identity(h0.rows(), h0.cols());

  double t = t0;
  for (const auto& [len, n] : plan_pieces(t0, t1, options.steps, options.breakpoints)) {
    const double dt = len / n;
    const double start = t;
    for (int k = 0; k < n; ++k) {
      const double tk = start + k * dt;
      const ComplexMatrix step = options.stepper == Stepper::Midpoint
                                     ? step_midpoint(hamiltonian, tk, dt)
                                     : step_magnus4(hamiltonian, tk, dt);
      out.U = step * out.U;
      ++out.steps;
      if (options.keep_grid) out.grid.emplace_back(start + (k + 1) * dt, out.U);
    }
    t = start + len;
  }
  out.unitarity_defect = unitarity_defect(out.U);
  return out;
}

PropagationResult propagate(const MatrixFunction& hamiltonian, double t0, double t1, int steps,
                            Stepper stepper) {
  PropagationOptions options;
  options.steps = steps;
  options.stepper = stepper;
  return propagate(hamiltonian, t0, t1, options);
}

PropagationResult propagate(const OneQubitParams& p, double t0, double t1, int steps,
                            Stepper stepper) {
  p.validate();
  return propagate([&p](double t) { return one_qubit_hamiltonian(p, t); }, t0, t1, steps,
                   stepper);
}

PropagationResult propagate(const TwoQubitParams& p, double t0, double t1, int steps,
                            Stepper stepper) {
  p.validate();
  PropagationOptions options;
  options.steps = steps;
  options.stepper = stepper;
  options.breakpoints = p.q.breakpoints(t0, t1);
  return propagate([&p](double t) { return two_qubit_hamiltonian(p, t); }, t0, t1, options);
}

double invariant_expectation_drift(const MatrixFunction& hamiltonian,
                                   const MatrixFunction& observable, const StateVector& psi0,
                                   double period, const PropagationOptions& options) {
  if (std::abs(psi0.norm() - 1.0) > kDefaultTolerances.state_norm) {
    throw ValidationError("initial state must be normalized");
  }
  PropagationOptions opts = options;
  opts.keep_grid = true;
  const auto result = propagate(hamiltonian, 0.0, period, opts);
  const double start = (psi0.adjoint() * observable(0.0) * psi0)(0, 0).real();
  double drift = 0.0;
  for (const auto& [t, u] : result.grid) {
    const StateVector psi = u * psi0;
    const double value = (psi.adjoint() * observable(t) * psi)(0, 0).real();
    drift = std::max(drift, std::abs(value - start));
  }
  return drift;
}

double invariant_expectation_drift(const OneQubitParams& p, const StateVector& psi0,
                                   int steps) {
  p.validate();
  PropagationOptions opts;
  opts.steps = steps;
  return invariant_expectation_drift([&p](double t) { return one_qubit_hamiltonian(p, t); },
                                     [&p](double t) { return one_qubit_invariant(p, t); }, psi0,
                                     p.period(), opts);
}

double invariant_expectation_drift(const TwoQubitParams& p, const StateVector& psi0, int steps) {
  p.validate();
  PropagationOptions opts;
  opts.steps = steps;
  opts.breakpoints = p.q.breakpoints(0.0, p.period());
  return invariant_expectation_drift([&p](double t) { return two_qubit_hamiltonian(p, t); },
                                     [&p](double t) { return two_qubit_invariant(p, t); }, psi0,
                                     p.period(), opts);
}

}  // namespace holo
