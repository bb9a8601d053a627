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

#include "holo/gates.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "holo/errors.hpp"
#include "holo/phases.hpp"

namespace holo {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite_positive_omega(double omega) {
  if (!std::isfinite(omega) || omega <= 0.0) throw ValidationError("omega must be positive");
}

}  // namespace

OneQubitParams solve_one_qubit_params(double beta, double omega) {
  require_finite_positive_omega(omega);
  if (!std::isfinite(beta) || beta <= 0.0 || beta >= kPi / 2) {
    throw ValidationError("beta must lie in the open interval (0, pi/2)");
  }
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  return OneQubitParams{omega * s * c, omega * c * c, omega};
}

double one_qubit_condition_residual(const OneQubitParams& p) {
  return p.Omega * p.Omega + p.Delta * (p.Delta - p.omega);
}

ComplexMatrix one_qubit_gate_analytic(double beta) {
  if (!std::isfinite(beta) || beta <= 0.0 || beta >= kPi / 2) {
    throw ValidationError("beta must lie in the open interval (0, pi/2)");
  }
  const double s = std::sin(beta);
  const ComplexMatrix axis = -std::cos(beta) * pauli::x() + s * pauli::z();
  return -exp_i_hermitian(axis, kPi * s);
}

double adiabaticity_product(const OneQubitParams& p, const Tolerances& tol) {
  p.validate();
  const double residual = one_qubit_condition_residual(p);
  if (std::abs(residual) > tol.one_qubit_condition * p.omega * p.omega) {
    std::ostringstream os;
    os << "parameters violate Omega^2 + Delta (Delta - omega) = 0 (residual " << residual << ")";
    throw ValidationError(os.str());
  }
  return std::hypot(p.Omega, p.Delta) * p.period();
}

double entangler_function(double r) {
  const double ap = std::sqrt(0.5 + r);
  const double am = std::sqrt(0.5 - r);
  return 1.0 / (std::tan(kPi * ap) * std::tan(kPi * am)) + 2.0 * ap * am;
}

std::pair<double, double> entangler_schmidt_values(double r) {
  const double ap = std::sqrt(0.5 + r);
  const double am = std::sqrt(0.5 - r);
  const double overlap = 0.5 * std::cos(kPi * ap) * std::cos(kPi * am) +
                         ap * am * std::sin(kPi * ap) * std::sin(kPi * am);
  return {std::sqrt(0.5 + std::abs(overlap)), std::sqrt(std::max(0.0, 0.5 - std::abs(overlap)))};
}

double solve_entangler_ratio(double lo, double hi, double tol) {
  if (!(lo < hi) || lo <= -0.5 || hi >= 0.5) {
    throw ValidationError("entangler bracket must satisfy -1/2 < lo < hi < 1/2");
  }
  double f_lo = entangler_function(lo);
  const double f_hi = entangler_function(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    std::ostringstream os;
    os << "no sign change of the entangler condition on [" << lo << ", " << hi << "]";
    throw BracketError(os.str());
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double f_mid = entangler_function(mid);
    if (std::abs(f_mid) <= tol || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) break;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

std::vector<EntanglerRoot> find_entangler_roots(int grid, double tol) {
  if (grid < 2) throw ValidationError("find_entangler_roots: grid must have >= 2 points");
  std::vector<EntanglerRoot> roots;
  auto node = [grid](int k) { return 0.5 * (k + 1) / (grid + 1); };
  double prev = entangler_function(node(0));
  for (int k = 1; k < grid; ++k) {
    const double cur = entangler_function(node(k));
    if ((prev > 0.0) != (cur > 0.0)) {
      const double r = solve_entangler_ratio(node(k - 1), node(k), tol);
      const double residual = entangler_function(r);
      // A sign flip across a cot pole bisects to a point with huge |f|.
      if (std::abs(residual) < 1e-6) {
        const auto [dp, dm] = entangler_schmidt_values(r);
        const double target = std::sqrt(0.5);
        const bool cnot = std::abs(dp - target) < 1e-6 && std::abs(dm - target) < 1e-6;
        roots.push_back({r, residual, cnot});
      }
    }
    prev = cur;
  }
  return roots;
}

double entangler_ratio() {
  static const double r = [] {
    for (const auto& root : find_entangler_roots()) {
      if (root.reproduces_cnot_values) return root.r;
    }
    throw BracketError("no perfect-entangler root found in (0, 1/2)");
  }();
  return r;
}

TwoQubitParams solve_two_qubit_params(double omega, double r, Waveform q, CouplingAxis axis,
                                      int omega_sign) {
  require_finite_positive_omega(omega);
  if (!std::isfinite(r) || std::abs(r) >= 0.5) {
    throw ValidationError("|r| = |J/omega| must be below 1/2 for a real Omega");
  }
  if (omega_sign != 1 && omega_sign != -1) throw ValidationError("omega_sign must be +1 or -1");
  TwoQubitParams p;
  p.omega = omega;
  p.J = r * omega;
  p.D = 0.5 * omega;
  p.Omega = omega_sign * std::sqrt(0.25 * omega * omega - p.J * p.J);
  p.axis = axis;
  p.q = std::move(q);
  p.validate();
  return p;
}

double two_qubit_condition_residual(const TwoQubitParams& p) {
  const double half = 0.5 * p.omega;
  return std::max(std::abs(p.D - half) / p.omega,
                  std::abs(p.Omega * p.Omega + p.J * p.J - half * half) / (p.omega * p.omega));
}

ComplexMatrix two_qubit_gate_analytic(const TwoQubitParams& p, const Tolerances& tol) {
  p.validate(tol);
  if (two_qubit_condition_residual(p) > tol.two_qubit_condition) {
    throw ValidationError(
        "two-qubit parameters violate D = omega/2, Omega^2 + J^2 = (omega/2)^2");
  }
  const InvariantEigensystem system(p);
  const double T = system.period();
  // Each block contributes sum_b e^{i alpha_b(T)} |phi_b><phi_b|; the vectors
  // are single valued so phi_b(T) = phi_b(0).
  ComplexMatrix blocks = ComplexMatrix::Zero(4, 4);
  for (int n = 0; n < system.size(); ++n) {
    const StateVector v = system.vector_at(n, 0.0);
    blocks += std::exp(kI * system.lr_phase(n, T)) * v * v.adjoint();
  }
  const ComplexMatrix u_q = exp_i_hermitian(u1_generator(p.axis), -p.q.integral(T));
  return u_q * blocks;
}

double two_qubit_adiabaticity_product(const TwoQubitParams& p) {
  return std::max(std::hypot(p.Omega, p.delta_plus()), std::hypot(p.Omega, p.delta_minus())) *
         p.period();
}

GateSpec make_one_qubit_gate(double beta, double omega) {
  GateSpec g;
  g.kind = GateSpec::Kind::OneQubit;
  g.beta = beta;
  g.omega = omega;
  g.one = solve_one_qubit_params(beta, omega);
  g.U = one_qubit_gate_analytic(beta);
  g.T = g.one.period();
  return g;
}

GateSpec make_two_qubit_gate(double omega, double r, Waveform q, CouplingAxis axis) {
  GateSpec g;
  g.kind = GateSpec::Kind::TwoQubit;
  g.r = r;
  g.omega = omega;
  g.two = solve_two_qubit_params(omega, r, std::move(q), axis);
  g.U = two_qubit_gate_analytic(g.two);
  g.T = g.two.period();
  return g;
}

}  // namespace holo
