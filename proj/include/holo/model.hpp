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
#include <functional>
#include <string>
#include <vector>

#include "holo/linalg.hpp"
#include "holo/tolerances.hpp"

namespace holo {

// Time-dependent matrix, e.g. t -> H(t).
using MatrixFunction = std::function<ComplexMatrix(double)>;

// Rotating-field qubit H = (Omega cos wt sx + Omega sin wt sy + Delta sz) / 2,
// natural units (hbar = 1).
struct OneQubitParams {
  double Omega = 0.0;  // Rabi amplitude
  double Delta = 0.0;  // detuning
  double omega = 1.0;  // drive angular frequency, > 0

  double period() const;
  void validate() const;
};

// Piecewise-constant control q(t), given as (value, duration) segments that
// tile one period and repeat periodically. An empty waveform is q == 0.
class Waveform {
 public:
  struct Segment {
    double value = 0.0;
    double duration = 0.0;

    bool operator==(const Segment&) const = default;
  };

  Waveform() = default;
  explicit Waveform(std::vector<Segment> segments);

  static Waveform constant(double value, double period);

  bool is_zero() const;
  const std::vector<Segment>& segments() const { return segments_; }
  // Sum of durations; 0 for the zero waveform.
  double period() const { return period_; }

  // q(t); t is wrapped into one period, segments are right-continuous.
  double value_at(double t) const;
  // Integral of q from 0 to t over the periodic extension.
  double integral(double t) const;
  // Segment boundaries strictly inside (t0, t1).
  std::vector<double> breakpoints(double t0, double t1) const;

  // "v1:d1,v2:d2,..." (value:duration pairs). A duration written as "0.25T"
  // is a fraction of `period`. An empty string is q == 0.
  static Waveform parse(const std::string& text, double period = 0.0);
  std::string to_string() const;

  bool operator==(const Waveform&) const = default;

 private:
  std::vector<Segment> segments_;
  double period_ = 0.0;
};

enum class CouplingAxis { ZZ, XX };

std::string to_string(CouplingAxis axis);
CouplingAxis parse_axis(const std::string& text);

// Two qubits, control first: H' = J/2 sz x sz + 1 x H_c(t) + q(t) sz x 1 with
// H_c = (Omega cos wt sx + Omega sin wt sy + D sz) / 2.
//
// For CouplingAxis::XX the coupling is sx x sx, the u(1) term is sx x 1, and
// the target drive rotates about x: H_c = (Omega cos wt sy + Omega sin wt sz +
// D sx) / 2. That Hamiltonian is F H'_ZZ F^dag for the fixed local frame F
// returned by coupling_frame(), which is what keeps the invariant closed-form.
struct TwoQubitParams {
  double Omega = 0.0;
  double D = 0.0;      // target detuning
  double J = 0.0;      // Ising coupling
  double omega = 1.0;  // > 0
  CouplingAxis axis = CouplingAxis::ZZ;
  Waveform q;          // must tile [0, T] unless empty

  double delta_plus() const { return D + J; }
  double delta_minus() const { return D - J; }
  double delta(int sign) const { return sign > 0 ? delta_plus() : delta_minus(); }
  double period() const;
  void validate(const Tolerances& tol = kDefaultTolerances) const;
};

ComplexMatrix one_qubit_hamiltonian(const OneQubitParams& p, double t);
// I = Omega cos wt sx + Omega sin wt sy + (Delta - omega) sz
ComplexMatrix one_qubit_invariant(const OneQubitParams& p, double t);
// dI/dt in closed form.
ComplexMatrix one_qubit_invariant_rate(const OneQubitParams& p, double t);

ComplexMatrix two_qubit_hamiltonian(const TwoQubitParams& p, double t);
// H'_+ + H'_-, i.e. the Hamiltonian without the u(1) term q(t) sz x 1.
ComplexMatrix two_qubit_block_hamiltonian(const TwoQubitParams& p, double t);
// I'_+ + I'_-; independent of q.
ComplexMatrix two_qubit_invariant(const TwoQubitParams& p, double t);
ComplexMatrix two_qubit_invariant_rate(const TwoQubitParams& p, double t);

// sz x 1 (ZZ) or sx x 1 (XX).
ComplexMatrix u1_generator(CouplingAxis axis);
// Local unitary F with H'_axis = F H'_ZZ F^dag; identity for ZZ,
// Hadamard x W for XX where W maps (sx, sy, sz) -> (sy, sz, sx).
ComplexMatrix coupling_frame(CouplingAxis axis);

// {G+x, G+y, G+z, G-x, G-y, G-z, u(1)} with G^s_i = (1 + s P)/2 x t_i, where
// P = sz, t = (sx, sy, sz) for ZZ and P = sx, t = (sy, sz, sx) for XX.
std::array<ComplexMatrix, 7> subalgebra_generators(CouplingAxis axis);

// || (I(t+dt) - I(t-dt)) / 2dt + i [H(t), I(t)] ||_max
double invariant_residual(const MatrixFunction& hamiltonian, const MatrixFunction& invariant,
                          double t, double dt);
// || dI/dt + i [H(t), I(t)] ||_max with dI/dt supplied in closed form.
double invariant_residual_exact(const MatrixFunction& hamiltonian,
                                const MatrixFunction& invariant,
                                const MatrixFunction& invariant_rate, double t);

double invariant_residual_exact(const OneQubitParams& p, double t);
double invariant_residual_exact(const TwoQubitParams& p, double t);

}  // namespace holo
