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

#include <utility>
#include <vector>

#include "holo/linalg.hpp"
#include "holo/model.hpp"
#include "holo/tolerances.hpp"

namespace holo {

// Parameters realizing the one-qubit holonomic gate U_beta:
// Delta = omega cos^2(beta), Omega = omega sin(beta) cos(beta), so that
// Omega^2 + Delta (Delta - omega) = 0 and both dynamical phases vanish.
// beta must lie in (0, pi/2).
OneQubitParams solve_one_qubit_params(double beta, double omega);

// Omega^2 + Delta (Delta - omega).
double one_qubit_condition_residual(const OneQubitParams& p);

// U_beta(T) = -exp(i pi sin(beta) [-cos(beta) sx + sin(beta) sz]).
ComplexMatrix one_qubit_gate_analytic(double beta);

// delta_E * T = sqrt(Omega^2 + Delta^2) * 2 pi / omega. Requires the
// vanishing-phase condition (within tol.one_qubit_condition * omega^2).
double adiabaticity_product(const OneQubitParams& p, const Tolerances& tol = kDefaultTolerances);

// f(r) = cot(pi a+) cot(pi a-) + 2 a+ a-, a+- = sqrt(1/2 +- r). A zero makes
// the two nonzero Schmidt coefficients equal to sqrt(1/2).
double entangler_function(double r);

// Closed-form nonzero Schmidt coefficients (D+, D-) of the two-qubit gate at
// ratio r: sqrt(1/2 +- (cos(pi a+) cos(pi a-) / 2 + a+ a- sin(pi a+) sin(pi a-))).
std::pair<double, double> entangler_schmidt_values(double r);

// Bisection of f on [lo, hi] (inside (0, 1/2)) until |f| <= tol or the
// bracket collapses. Throws BracketError if f does not change sign.
double solve_entangler_ratio(double lo, double hi, double tol = 1e-12);

struct EntanglerRoot {
  double r = 0.0;
  double residual = 0.0;
  // Nonzero Schmidt coefficients of the realized gate both equal sqrt(1/2).
  bool reproduces_cnot_values = false;
};

// Scans f on `grid` points across (0, 1/2), refines every sign change by
// bisection, and keeps roots where |f| is small (pole crossings are dropped).
std::vector<EntanglerRoot> find_entangler_roots(int grid = 512, double tol = 1e-12);

// The canonical positive root.
double entangler_ratio();

// J = r omega, D = omega / 2, Omega = omega_sign * sqrt((omega/2)^2 - J^2).
// |r| must be < 1/2.
TwoQubitParams solve_two_qubit_params(double omega, double r, Waveform q = {},
                                      CouplingAxis axis = CouplingAxis::ZZ,
                                      int omega_sign = +1);

// max of |D - omega/2| and |Omega^2 + J^2 - (omega/2)^2|, in units of omega
// and omega^2.
double two_qubit_condition_residual(const TwoQubitParams& p);

// U' = U_q' U'_+ U'_- at T, from the spectral form on each block.
ComplexMatrix two_qubit_gate_analytic(const TwoQubitParams& p,
                                      const Tolerances& tol = kDefaultTolerances);

// max over blocks of sqrt(Omega^2 + Delta_s^2) * T.
double two_qubit_adiabaticity_product(const TwoQubitParams& p);

struct GateSpec {
  enum class Kind { OneQubit, TwoQubit };
  Kind kind = Kind::OneQubit;
  double beta = 0.0;   // one qubit
  double r = 0.0;      // two qubits, J / omega
  double omega = 1.0;
  OneQubitParams one;
  TwoQubitParams two;
  ComplexMatrix U;
  double T = 0.0;
};

GateSpec make_one_qubit_gate(double beta, double omega);
GateSpec make_two_qubit_gate(double omega, double r, Waveform q = {},
                             CouplingAxis axis = CouplingAxis::ZZ);

}  // namespace holo
