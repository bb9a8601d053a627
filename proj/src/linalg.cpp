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

#include "holo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holo/errors.hpp"

namespace holo {

namespace pauli {

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

const std::vector<ComplexMatrix>& basis() {
  static const std::vector<ComplexMatrix> b{identity(2), x(), y(), z()};
  return b;
}

}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return u.rows() == u.cols() && unitarity_defect(u) <= tol;
}

void require_gate_dim(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || (a.rows() != 2 && a.rows() != 4)) {
    throw ValidationError("matrix must be 2x2 or 4x4, got " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()));
  }
}

void require_hermitian(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) {
    throw ValidationError("matrix is not Hermitian (max |A - A^dag| = " +
                          std::to_string(max_abs(a - a.adjoint())) + ")");
  }
}

void require_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) throw ValidationError("matrix is not square");
  if (const double d = unitarity_defect(u); d > tol) {
    throw ValidationError("matrix is not unitary (defect " + std::to_string(d) + ")");
  }
}

EigenDecomposition eig_hermitian(const ComplexMatrix& a) {
  require_hermitian(a);
  // Symmetrize so rounding in the lower triangle cannot leak in.
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < out.vectors.cols(); ++k) {
    auto col = out.vectors.col(k);
    for (Eigen::Index i = 0; i < col.size(); ++i) {
      if (std::abs(col(i)) > 1e-12) {
        col *= std::conj(col(i)) / std::abs(col(i));
        col(i) = std::abs(col(i));
        break;
      }
    }
  }
  return out;
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& a, double s) {
  const auto eig = eig_hermitian(a);
  Eigen::VectorXcd phases(eig.values.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(kI * (s * eig.values(k)));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double unitary_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw ValidationError("unitary_distance: dimension mismatch");
  }
  const double dim = static_cast<double>(u.rows());
  // min over phi of ||U - e^{i phi} V||_F^2 equals 2 dim - 2 |tr(U^dag V)|; the
  // residual form avoids the cancellation in 1 - |tr|/dim.
  const Complex overlap = (u.adjoint() * v).trace();
  const Complex align = std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : 1.0;
  const double gap = (u - align * v).squaredNorm() / (2.0 * dim);
  return std::sqrt(std::clamp(gap, 0.0, 1.0));
}

}  // namespace holo
