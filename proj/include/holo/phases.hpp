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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "holo/linalg.hpp"
#include "holo/model.hpp"

namespace holo {

// One eigenvector of the dynamical invariant in the cyclic gauge
//   phi(t) = (e^{-i w t} cos(theta), sin(theta))
// (embedded into block s of the two-qubit space and rotated by the coupling
// frame for XX). cos(theta) = xi / sqrt(1 + xi^2), sin(theta) = 1 / sqrt(1 + xi^2).
struct CyclicEigenvector {
  int block = 0;   // 0 for one qubit, +1 / -1 for the P+ / P- block
  int branch = 0;  // +1 for eigenvalue +lambda, -1 for -lambda
  double lambda = 0.0;
  double eigenvalue = 0.0;  // branch * lambda
  double cos_theta = 0.0;
  double sin_theta = 1.0;
  double xi = 0.0;  // +-inf in the Omega -> 0 limit

  double theta() const;
  // "+", "-" for one qubit; "+,+", "+,-", ... (block, branch) for two.
  std::string label() const;
};

// Closed-form eigensystem of the one- or two-qubit invariant. Vectors are
// single valued: vector_at(T) == vector_at(0).
class InvariantEigensystem {
 public:
  explicit InvariantEigensystem(const OneQubitParams& p);
  explicit InvariantEigensystem(const TwoQubitParams& p);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(modes_.size()); }
  double omega() const { return omega_; }
  double period() const;
  bool two_qubit() const { return dim_ == 4; }

  // Ordered by eigenvalue, ascending.
  const std::vector<CyclicEigenvector>& modes() const { return modes_; }
  const CyclicEigenvector& mode(int n) const { return modes_.at(n); }
  int index_of(int block, int branch) const;

  StateVector vector_at(int n, double t) const;
  StateVector vector_rate(int n, double t) const;

  ComplexMatrix invariant_at(double t) const;
  ComplexMatrix hamiltonian_at(double t) const;
  // Hamiltonian without the commuting u(1) term (equal to H for one qubit).
  ComplexMatrix holonomic_hamiltonian_at(double t) const;

  // Lewis-Riesenfeld phase (omega - branch * lambda) t / 2 of the
  // su(2) part.
  double lr_phase(int n, double t) const;
  // Phase from the u(1) factor exp(-i G_u1 int_0^t q): -block * int_0^t q.
  double u1_phase(int n, double t) const;

  const std::variant<OneQubitParams, TwoQubitParams>& params() const { return params_; }

 private:
  std::variant<OneQubitParams, TwoQubitParams> params_;
  int dim_ = 2;
  double omega_ = 1.0;
  ComplexMatrix frame_;
  std::vector<CyclicEigenvector> modes_;
};

struct PhaseRecord {
  std::string label;
  double eigenvalue = 0.0;
  double alpha = 0.0;    // Lewis-Riesenfeld phase at T, = gamma_g + gamma_d
  double gamma_g = 0.0;  // geometric (Aharonov-Anandan) phase
  double gamma_d = 0.0;  // dynamical phase
  double u1 = 0.0;       // local u(1) phase (two qubits; 0 otherwise)

  bool operator==(const PhaseRecord&) const = default;
};

inline constexpr int kMinPhaseSteps = 64;

// Geometric phase as the discrete holonomy -sum arg<phi_k|phi_k+1> and the
// dynamical phase -int <phi|H|phi> by the trapezoid rule, both on the given
// grid and on its midpoint refinement, Richardson-combined.
PhaseRecord phase_split(const InvariantEigensystem& system, int n, std::span<const double> times);
// Uniform grid with the given number of steps over one period.
PhaseRecord phase_split(const InvariantEigensystem& system, int n, int steps);
PhaseRecord phase_split(const OneQubitParams& p, int n, int steps);
PhaseRecord phase_split(const TwoQubitParams& p, int n, int steps);

std::vector<PhaseRecord> phase_table(const InvariantEigensystem& system, int steps);

// U(t; 0) = sum_n e^{i alpha_n(t)} |phi_n(t)><phi_n(0)|, times the u(1) factor.
ComplexMatrix reconstruct_evolution(const InvariantEigensystem& system, double t);
ComplexMatrix reconstruct_evolution(const OneQubitParams& p, double t);
ComplexMatrix reconstruct_evolution(const TwoQubitParams& p, double t);

// max over m != n of |<phi_m|H|phi_n> - i <phi_m|d phi_n/dt>| at time t.
double offdiagonal_connection_residual(const InvariantEigensystem& system, double t);

// max-norm distance between the propagated U(T) phi_n(0) and
// e^{i (alpha_n + u1)} phi_n(0), with alpha_n extracted numerically.
double cyclic_return_error(const InvariantEigensystem& system, int n, int steps);

}  // namespace holo
