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

#include "holo/phases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "holo/errors.hpp"
#include "holo/propagator.hpp"

namespace holo {

namespace {

// Eigenvector (cos theta, sin theta) of a sx + ... with z-coefficient `a`,
// branch b = +-1. Both algebraically equal forms are tried and the one with
// the larger norm is kept, so Omega -> 0 degrades gracefully.
CyclicEigenvector make_mode(double omega_drive, double a, int block, int branch) {
  CyclicEigenvector m;
  m.block = block;
  m.branch = branch;
  m.lambda = std::hypot(omega_drive, a);
  m.eigenvalue = branch * m.lambda;
  double c1 = a + branch * m.lambda, s1 = omega_drive;
  double c2 = omega_drive, s2 = branch * m.lambda - a;
  double c = c1, s = s1;
  if (std::hypot(c2, s2) > std::hypot(c1, s1)) {
    c = c2;
    s = s2;
  }
  const double norm = std::hypot(c, s);
  if (norm == 0.0) {
    // I == 0: any basis; keep the computational one.
    c = branch > 0 ? 0.0 : 1.0;
    s = branch > 0 ? 1.0 : 0.0;
  } else {
    c /= norm;
    s /= norm;
    if (s < 0.0) {
      c = -c;
      s = -s;
    }
  }
  m.cos_theta = c;
  m.sin_theta = s;
  m.xi = s > 0.0 ? c / s : std::copysign(std::numeric_limits<double>::infinity(), c);
  return m;
}

void sort_modes(std::vector<CyclicEigenvector>& modes) {
  std::stable_sort(modes.begin(), modes.end(), [](const auto& l, const auto& r) {
    return l.eigenvalue < r.eigenvalue;
  });
}

}  // namespace

double CyclicEigenvector::theta() const { return std::atan2(sin_theta, cos_theta); }

std::string CyclicEigenvector::label() const {
  const std::string b = branch > 0 ? "+" : "-";
  if (block == 0) return b;
  return std::string(block > 0 ? "+" : "-") + "," + b;
}

InvariantEigensystem::InvariantEigensystem(const OneQubitParams& p)
    : params_(p), dim_(2), omega_(p.omega), frame_(pauli::identity(2)) {
  p.validate();
  for (int branch : {-1, +1}) modes_.push_back(make_mode(p.Omega, p.Delta - p.omega, 0, branch));
  sort_modes(modes_);
}

InvariantEigensystem::InvariantEigensystem(const TwoQubitParams& p)
    : params_(p), dim_(4), omega_(p.omega), frame_(coupling_frame(p.axis)) {
  p.validate();
  for (int block : {+1, -1}) {
    for (int branch : {-1, +1}) {
      modes_.push_back(make_mode(p.Omega, p.delta(block) - p.omega, block, branch));
    }
  }
  sort_modes(modes_);
}

double InvariantEigensystem::period() const { return 2.0 * std::numbers::pi / omega_; }

int InvariantEigensystem::index_of(int block, int branch) const {
  for (int n = 0; n < size(); ++n) {
    if (modes_[n].block == block && modes_[n].branch == branch) return n;
  }
  throw ValidationError("no eigenvector with that block/branch label");
}

StateVector InvariantEigensystem::vector_at(int n, double t) const {
  const auto& m = mode(n);
  StateVector v = StateVector::Zero(dim_);
  const int offset = m.block < 0 ? 2 : 0;
  v(offset) = std::exp(-kI * (omega_ * t)) * m.cos_theta;
  v(offset + 1) = m.sin_theta;
  return dim_ == 2 ? v : StateVector(frame_ * v);
}

StateVector InvariantEigensystem::vector_rate(int n, double t) const {
  const auto& m = mode(n);
  StateVector v = StateVector::Zero(dim_);
  const int offset = m.block < 0 ? 2 : 0;
  v(offset) = -kI * omega_ * std::exp(-kI * (omega_ * t)) * m.cos_theta;
  return dim_ == 2 ? v : StateVector(frame_ * v);
}

ComplexMatrix InvariantEigensystem::invariant_at(double t) const {
  return std::visit(
      [t](const auto& p) -> ComplexMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, OneQubitParams>) {
          return one_qubit_invariant(p, t);
        } else {
          return two_qubit_invariant(p, t);
        }
      },
      params_);
}

ComplexMatrix InvariantEigensystem::hamiltonian_at(double t) const {
  return std::visit(
      [t](const auto& p) -> ComplexMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, OneQubitParams>) {
          return one_qubit_hamiltonian(p, t);
        } else {
          return two_qubit_hamiltonian(p, t);
        }
      },
      params_);
}

ComplexMatrix InvariantEigensystem::holonomic_hamiltonian_at(double t) const {
  return std::visit(
      [t](const auto& p) -> ComplexMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, OneQubitParams>) {
          return one_qubit_hamiltonian(p, t);
        } else {
          return two_qubit_block_hamiltonian(p, t);
        }
      },
      params_);
}

double InvariantEigensystem::lr_phase(int n, double t) const {
  return 0.5 * (omega_ - mode(n).eigenvalue) * t;
}

double InvariantEigensystem::u1_phase(int n, double t) const {
  const auto* two = std::get_if<TwoQubitParams>(&params_);
  if (!two) return 0.0;
  return -mode(n).block * two->q.integral(t);
}

// ---------------------------------------------------------------------------
// Phase extraction
// ---------------------------------------------------------------------------

namespace {

struct RawPhases {
  double geometric = 0.0;
  double dynamical = 0.0;
};

RawPhases raw_phases(const InvariantEigensystem& system, int n, std::span<const double> times) {
  RawPhases out;
  StateVector prev = system.vector_at(n, times[0]);
  auto energy = [&](double t, const StateVector& v) {
    return (v.adjoint() * system.holonomic_hamiltonian_at(t) * v)(0, 0).real();
  };
  double e_prev = energy(times[0], prev);
  for (std::size_t k = 1; k < times.size(); ++k) {
    const StateVector next = system.vector_at(n, times[k]);
    out.geometric -= std::arg(prev.dot(next));
    const double e_next = energy(times[k], next);
    out.dynamical -= 0.5 * (e_prev + e_next) * (times[k] - times[k - 1]);
    prev = next;
    e_prev = e_next;
  }
  return out;
}

}  // namespace

PhaseRecord phase_split(const InvariantEigensystem& system, int n, std::span<const double> times) {
  if (times.size() < 2) throw ValidationError("phase_split: grid needs at least two points");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) throw ValidationError("phase_split: grid must increase");
  }
  std::vector<double> refined;
  refined.reserve(2 * times.size() - 1);
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    refined.push_back(times[k]);
    refined.push_back(0.5 * (times[k] + times[k + 1]));
  }
  refined.push_back(times.back());

  // Both sums carry an O(h^2) leading error with only even powers following,
  // so one Richardson step leaves O(h^4).
  const RawPhases coarse = raw_phases(system, n, times);
  const RawPhases fine = raw_phases(system, n, refined);

  const auto& m = system.mode(n);
  PhaseRecord rec;
  rec.label = m.label();
  rec.eigenvalue = m.eigenvalue;
  rec.gamma_g = (4.0 * fine.geometric - coarse.geometric) / 3.0;
  rec.gamma_d = (4.0 * fine.dynamical - coarse.dynamical) / 3.0;
  rec.alpha = rec.gamma_g + rec.gamma_d;
  rec.u1 = system.u1_phase(n, times.back()) - system.u1_phase(n, times.front());
  return rec;
}

PhaseRecord phase_split(const InvariantEigensystem& system, int n, int steps) {
  if (steps < kMinPhaseSteps) throw ValidationError("phase_split: steps must be >= 64");
  std::vector<double> times(steps + 1);
  const double period = system.period();
  for (int k = 0; k <= steps; ++k) times[k] = period * k / steps;
  return phase_split(system, n, std::span<const double>(times));
}

PhaseRecord phase_split(const OneQubitParams& p, int n, int steps) {
  return phase_split(InvariantEigensystem(p), n, steps);
}

PhaseRecord phase_split(const TwoQubitParams& p, int n, int steps) {
  return phase_split(InvariantEigensystem(p), n, steps);
}

std::vector<PhaseRecord> phase_table(const InvariantEigensystem& system, int steps) {
  std::vector<PhaseRecord> out;
  for (int n = 0; n < system.size(); ++n) out.push_back(phase_split(system, n, steps));
  return out;
}

ComplexMatrix reconstruct_evolution(const InvariantEigensystem& system, double t) {
  ComplexMatrix u = ComplexMatrix::Zero(system.dim(), system.dim());
  for (int n = 0; n < system.size(); ++n) {
    const double phase = system.lr_phase(n, t) + system.u1_phase(n, t);
    u += std::exp(kI * phase) * system.vector_at(n, t) * system.vector_at(n, 0.0).adjoint();
  }
  return u;
}

ComplexMatrix reconstruct_evolution(const OneQubitParams& p, double t) {
  return reconstruct_evolution(InvariantEigensystem(p), t);
}

ComplexMatrix reconstruct_evolution(const TwoQubitParams& p, double t) {
  return reconstruct_evolution(InvariantEigensystem(p), t);
}

double offdiagonal_connection_residual(const InvariantEigensystem& system, double t) {
  const ComplexMatrix h = system.hamiltonian_at(t);
  double worst = 0.0;
  for (int m = 0; m < system.size(); ++m) {
    const StateVector vm = system.vector_at(m, t);
    for (int n = 0; n < system.size(); ++n) {
      if (m == n) continue;
      const Complex lhs = vm.dot(h * system.vector_at(n, t));
      const Complex rhs = kI * vm.dot(system.vector_rate(n, t));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

double cyclic_return_error(const InvariantEigensystem& system, int n, int steps) {
  const PhaseRecord rec = phase_split(system, n, steps);
  const PropagationResult prop = std::visit(
      [&](const auto& p) { return propagate(p, 0.0, system.period(), steps); }, system.params());
  const StateVector start = system.vector_at(n, 0.0);
  const StateVector evolved = prop.U * start;
  const StateVector expected = std::exp(kI * (rec.alpha + rec.u1)) * start;
  return (evolved - expected).cwiseAbs().maxCoeff();
}

}  // namespace holo
