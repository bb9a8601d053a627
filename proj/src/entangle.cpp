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

#include "holo/entangle.hpp"

#include <cmath>
#include <numbers>

#include "holo/errors.hpp"

namespace holo {

SchmidtReport schmidt_coefficients(const ComplexMatrix& u, const Tolerances& tol) {
  if (u.rows() != 4 || u.cols() != 4) throw ValidationError("schmidt_coefficients needs a 4x4 gate");
  require_unitary(u, tol.unitary);
  const auto& basis = pauli::basis();
  SchmidtReport rep;
  rep.C = ComplexMatrix(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      rep.C(i, j) = (u * kron(basis[i], basis[j])).trace() / 4.0;
    }
  }
  const auto sv = singular_values(rep.C);
  std::copy(sv.begin(), sv.end(), rep.singular_values.begin());
  const double cutoff = tol.schmidt_rank * rep.singular_values[0];
  for (double s : rep.singular_values) rep.rank += s > cutoff ? 1 : 0;
  const double target = std::sqrt(0.5);
  rep.cnot_class = std::abs(rep.singular_values[0] - target) <= tol.cnot_class &&
                   std::abs(rep.singular_values[1] - target) <= tol.cnot_class &&
                   rep.singular_values[2] < tol.schmidt_rank &&
                   rep.singular_values[3] < tol.schmidt_rank;
  return rep;
}

ComplexMatrix magic_basis() {
  ComplexMatrix q(4, 4);
  q << 1.0, 0.0, 0.0, kI,
       0.0, kI, 1.0, 0.0,
       0.0, kI, -1.0, 0.0,
       1.0, 0.0, 0.0, -kI;
  return q / std::numbers::sqrt2;
}

LocalInvariants makhlin_invariants(const ComplexMatrix& u, const Tolerances& tol) {
  if (u.rows() != 4 || u.cols() != 4) throw ValidationError("makhlin_invariants needs a 4x4 gate");
  require_unitary(u, tol.unitary);
  // Any fourth root of det works: the choice multiplies m by +-1.
  const Complex root = std::pow(u.determinant(), 0.25);
  const ComplexMatrix su = u / root;
  const ComplexMatrix q = magic_basis();
  const ComplexMatrix ub = q.adjoint() * su * q;
  const ComplexMatrix m = ub.transpose() * ub;
  const Complex tr = m.trace();
  const Complex g12 = tr * tr / 16.0;
  const Complex g3 = (tr * tr - (m * m).trace()) / 4.0;
  return {g12.real(), g12.imag(), g3.real()};
}

bool local_equivalence_check(const ComplexMatrix& u, const ComplexMatrix& v, double tol) {
  const auto a = makhlin_invariants(u);
  const auto b = makhlin_invariants(v);
  return std::abs(a.g1 - b.g1) <= tol && std::abs(a.g2 - b.g2) <= tol &&
         std::abs(a.g3 - b.g3) <= tol;
}

namespace named {

ComplexMatrix cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

ComplexMatrix swap() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

ComplexMatrix yy_entangler() {
  return exp_i_hermitian(kron(pauli::y(), pauli::y()), std::numbers::pi / 4.0);
}

}  // namespace named

}  // namespace holo
