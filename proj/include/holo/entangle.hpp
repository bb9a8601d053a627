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

#include "holo/linalg.hpp"
#include "holo/tolerances.hpp"

namespace holo {

// Operator Schmidt data of a two-qubit unitary. C_ij = tr(U s_i x s_j) / 4
// over {1, sx, sy, sz}; its singular values squared sum to 1.
struct SchmidtReport {
  ComplexMatrix C;
  std::array<double, 4> singular_values{};  // descending
  int rank = 0;  // values above tol.schmidt_rank * largest
  // Two leading values within tol.cnot_class of sqrt(1/2), the rest below
  // the rank threshold.
  bool cnot_class = false;
};

SchmidtReport schmidt_coefficients(const ComplexMatrix& u,
                                   const Tolerances& tol = kDefaultTolerances);

// Makhlin local invariants. With U normalized to det 1 and
// m = (Q^dag U Q)^T (Q^dag U Q) in the magic basis Q:
//   g1 + i g2 = tr(m)^2 / 16,   g3 = Re[(tr(m)^2 - tr(m^2)) / 4].
struct LocalInvariants {
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
};

LocalInvariants makhlin_invariants(const ComplexMatrix& u,
                                   const Tolerances& tol = kDefaultTolerances);

// Componentwise agreement of the Makhlin triples.
bool local_equivalence_check(const ComplexMatrix& u, const ComplexMatrix& v, double tol);

// Magic basis (columns):
//   (|00> + |11>)/sqrt2, i(|01> + |10>)/sqrt2, (|01> - |10>)/sqrt2, i(|00> - |11>)/sqrt2
ComplexMatrix magic_basis();

namespace named {
ComplexMatrix cnot();
ComplexMatrix swap();
// exp(i pi sy x sy / 4)
ComplexMatrix yy_entangler();
}  // namespace named

}  // namespace holo
