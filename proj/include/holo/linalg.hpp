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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "holo/tolerances.hpp"

namespace holo {

using Complex = std::complex<double>;
// Dense complex matrix of dimension 2 or 4 (Hamiltonians, invariants, gates).
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

namespace pauli {
ComplexMatrix identity(int dim = 2);
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
// {1, sx, sy, sz}
const std::vector<ComplexMatrix>& basis();
}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTolerances.hermitian);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTolerances.unitary);
double unitarity_defect(const ComplexMatrix& u);

// Throws ValidationError unless dim is 2 or 4 and the matrix is square.
void require_gate_dim(const ComplexMatrix& a);
void require_hermitian(const ComplexMatrix& a, double tol = kDefaultTolerances.hermitian);
void require_unitary(const ComplexMatrix& u, double tol = kDefaultTolerances.unitary);

struct EigenDecomposition {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // orthonormal columns
};

// Eigensystem of a Hermitian matrix. Each eigenvector is rotated so that its
// first component with modulus above 1e-12 is real and positive.
EigenDecomposition eig_hermitian(const ComplexMatrix& a);

// exp(i s A) for Hermitian A, built from the eigendecomposition so it is
// unitary to rounding for any s.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& a, double s);

// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& m);

// sqrt(1 - |tr(U^dag V)| / dim); zero exactly on global-phase orbits.
double unitary_distance(const ComplexMatrix& u, const ComplexMatrix& v);

}  // namespace holo
