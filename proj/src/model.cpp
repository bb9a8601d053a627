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

#include "holo/model.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

namespace {

bool finite(double v) { return std::isfinite(v); }

ComplexMatrix projector(const ComplexMatrix& axis, int sign) {
  return 0.5 * (pauli::identity(2) + static_cast<double>(sign) * axis);
}

// Target-qubit Pauli triple the drive and detuning act on.
std::array<ComplexMatrix, 3> target_paulis(CouplingAxis axis) {
  if (axis == CouplingAxis::ZZ) return {pauli::x(), pauli::y(), pauli::z()};
  return {pauli::y(), pauli::z(), pauli::x()};
}

ComplexMatrix control_axis(CouplingAxis axis) {
  return axis == CouplingAxis::ZZ ? pauli::z() : pauli::x();
}

}  // namespace

double OneQubitParams::period() const { return 2.0 * std::numbers::pi / omega; }

void OneQubitParams::validate() const {
  if (!finite(Omega) || !finite(Delta) || !finite(omega)) {
    throw ValidationError("one-qubit parameters must be finite");
  }
  if (omega <= 0.0) throw ValidationError("omega must be positive");
}

// ---------------------------------------------------------------------------
// Waveform
// ---------------------------------------------------------------------------

Waveform::Waveform(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (!finite(s.value) || !finite(s.duration)) {
      throw ValidationError("waveform values and durations must be finite");
    }
    if (s.duration <= 0.0) throw ValidationError("waveform durations must be positive");
    period_ += s.duration;
  }
}

Waveform Waveform::constant(double value, double period) {
  return Waveform({{value, period}});
}

bool Waveform::is_zero() const {
  for (const auto& s : segments_) {
    if (s.value != 0.0) return false;
  }
  return true;
}

double Waveform::value_at(double t) const {
  if (segments_.empty()) return 0.0;
  double r = t - std::floor(t / period_) * period_;
  for (const auto& s : segments_) {
    if (r < s.duration) return s.value;
    r -= s.duration;
  }
  return segments_.back().value;
}

double Waveform::integral(double t) const {
  if (segments_.empty()) return 0.0;
  double per_period = 0.0;
  for (const auto& s : segments_) per_period += s.value * s.duration;
  const double cycles = std::floor(t / period_);
  double r = t - cycles * period_;
  double acc = cycles * per_period;
  for (const auto& s : segments_) {
    if (r <= s.duration) return acc + s.value * r;
    acc += s.value * s.duration;
    r -= s.duration;
  }
  return acc;
}

std::vector<double> Waveform::breakpoints(double t0, double t1) const {
  std::vector<double> out;
  if (segments_.empty() || !(t1 > t0)) return out;
  const double margin = 1e-13 * std::max(1.0, std::abs(t1 - t0));
  const auto first = static_cast<long>(std::floor(t0 / period_));
  const auto last = static_cast<long>(std::ceil(t1 / period_));
  for (long k = first; k <= last; ++k) {
    double edge = static_cast<double>(k) * period_;
    for (const auto& s : segments_) {
      if (edge > t0 + margin && edge < t1 - margin &&
          (out.empty() || edge - out.back() > margin)) {
        out.push_back(edge);
      }
      edge += s.duration;
    }
  }
  return out;
}

Waveform Waveform::parse(const std::string& text, double period) {
  std::vector<Segment> segments;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ValidationError("waveform entry '" + item + "' is not value:duration");
    }
    std::string v = item.substr(0, colon);
    std::string d = item.substr(colon + 1);
    double scale = 1.0;
    if (!d.empty() && d.back() == 'T') {
      if (!(period > 0.0)) throw ValidationError("waveform duration '" + d + "' needs a period");
      d.pop_back();
      scale = period;
    }
    try {
      std::size_t used = 0;
      const double value = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      const double duration = std::stod(d, &used);
      if (used != d.size()) throw std::invalid_argument(d);
      segments.push_back({value, duration * scale});
    } catch (const std::logic_error&) {
      throw ValidationError("waveform entry '" + item + "' is not numeric");
    }
  }
  return Waveform(std::move(segments));
}

std::string Waveform::to_string() const {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) os << ',';
    os << segments_[i].value << ':' << segments_[i].duration;
  }
  return os.str();
}

std::string to_string(CouplingAxis axis) { return axis == CouplingAxis::ZZ ? "zz" : "xx"; }

CouplingAxis parse_axis(const std::string& text) {
  if (text == "zz" || text == "ZZ") return CouplingAxis::ZZ;
  if (text == "xx" || text == "XX") return CouplingAxis::XX;
  throw ValidationError("unknown coupling axis '" + text + "' (expected zz or xx)");
}

double TwoQubitParams::period() const { return 2.0 * std::numbers::pi / omega; }

void TwoQubitParams::validate(const Tolerances& tol) const {
  if (!finite(Omega) || !finite(D) || !finite(J) || !finite(omega)) {
    throw ValidationError("two-qubit parameters must be finite");
  }
  if (omega <= 0.0) throw ValidationError("omega must be positive");
  if (!q.segments().empty() &&
      std::abs(q.period() - period()) > tol.waveform_period * std::max(1.0, period())) {
    std::ostringstream os;
    os << std::setprecision(17) << "waveform durations sum to " << q.period()
       << " but the period is " << period();
    throw ValidationError(os.str());
  }
}

// ---------------------------------------------------------------------------
// Hamiltonians and invariants
// ---------------------------------------------------------------------------

ComplexMatrix one_qubit_hamiltonian(const OneQubitParams& p, double t) {
  const double c = std::cos(p.omega * t);
  const double s = std::sin(p.omega * t);
  return 0.5 * (p.Omega * c * pauli::x() + p.Omega * s * pauli::y() + p.Delta * pauli::z());
}

ComplexMatrix one_qubit_invariant(const OneQubitParams& p, double t) {
  const double c = std::cos(p.omega * t);
  const double s = std::sin(p.omega * t);
  return p.Omega * c * pauli::x() + p.Omega * s * pauli::y() + (p.Delta - p.omega) * pauli::z();
}

ComplexMatrix one_qubit_invariant_rate(const OneQubitParams& p, double t) {
  const double c = std::cos(p.omega * t);
  const double s = std::sin(p.omega * t);
  return p.Omega * p.omega * (-s * pauli::x() + c * pauli::y());
}

ComplexMatrix u1_generator(CouplingAxis axis) {
  return kron(control_axis(axis), pauli::identity(2));
}

ComplexMatrix two_qubit_block_hamiltonian(const TwoQubitParams& p, double t) {
  const auto tp = target_paulis(p.axis);
  const ComplexMatrix ax = control_axis(p.axis);
  const double c = std::cos(p.omega * t);
  const double s = std::sin(p.omega * t);
  const ComplexMatrix drive = 0.5 * (p.Omega * c * tp[0] + p.Omega * s * tp[1] + p.D * tp[2]);
  return 0.5 * p.J * kron(ax, tp[2]) + kron(pauli::identity(2), drive);
}

ComplexMatrix two_qubit_hamiltonian(const TwoQubitParams& p, double t) {
  return two_qubit_block_hamiltonian(p, t) + p.q.value_at(t) * u1_generator(p.axis);
}

ComplexMatrix two_qubit_invariant(const TwoQubitParams& p, double t) {
  const auto tp = target_paulis(p.axis);
  const ComplexMatrix ax = control_axis(p.axis);
  const double c = std::cos(p.omega * t);
  const double s = std::sin(p.omega * t);
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int sign : {+1, -1}) {
    const ComplexMatrix block =
        p.Omega * c * tp[0] + p.Omega * s * tp[1] + (p.delta(sign) - p.omega) * tp[2];
    out += kron(projector(ax, sign), block);
  }
  return out;
}

ComplexMatrix two_qubit_invariant_rate(const TwoQubitParams& p, double t) {
  const auto tp = target_paulis(p.axis);
  const double c = std::cos(p.omega * t);
  const double s = std::sin(p.omega * t);
  // Both blocks share the same time dependence, and P+ + P- = 1.
  return kron(pauli::identity(2), p.Omega * p.omega * (-s * tp[0] + c * tp[1]));
}

ComplexMatrix coupling_frame(CouplingAxis axis) {
  if (axis == CouplingAxis::ZZ) return pauli::identity(4);
  const ComplexMatrix hadamard = (pauli::x() + pauli::z()) / std::numbers::sqrt2;
  // Rotation by 2 pi / 3 about (1, 1, 1): sx -> sy -> sz -> sx.
  ComplexMatrix w(2, 2);
  w << Complex(1, -1), Complex(-1, -1), Complex(1, -1), Complex(1, 1);
  w *= 0.5;
  return kron(hadamard, w);
}

std::array<ComplexMatrix, 7> subalgebra_generators(CouplingAxis axis) {
  const auto tp = target_paulis(axis);
  const ComplexMatrix ax = control_axis(axis);
  std::array<ComplexMatrix, 7> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = kron(projector(ax, +1), tp[i]);
    out[3 + i] = kron(projector(ax, -1), tp[i]);
  }
  out[6] = u1_generator(axis);
  return out;
}

double invariant_residual(const MatrixFunction& hamiltonian, const MatrixFunction& invariant,
                          double t, double dt) {
  if (!(dt > 0.0)) throw ValidationError("invariant_residual: dt must be positive");
  const ComplexMatrix rate = (invariant(t + dt) - invariant(t - dt)) / (2.0 * dt);
  return max_abs(rate + kI * commutator(hamiltonian(t), invariant(t)));
}

double invariant_residual_exact(const MatrixFunction& hamiltonian,
                                const MatrixFunction& invariant,
                                const MatrixFunction& invariant_rate, double t) {
  return max_abs(invariant_rate(t) + kI * commutator(hamiltonian(t), invariant(t)));
}

double invariant_residual_exact(const OneQubitParams& p, double t) {
  return max_abs(one_qubit_invariant_rate(p, t) +
                 kI * commutator(one_qubit_hamiltonian(p, t), one_qubit_invariant(p, t)));
}

double invariant_residual_exact(const TwoQubitParams& p, double t) {
  return max_abs(two_qubit_invariant_rate(p, t) +
                 kI * commutator(two_qubit_hamiltonian(p, t), two_qubit_invariant(p, t)));
}

}  // namespace holo
