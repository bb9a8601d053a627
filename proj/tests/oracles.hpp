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

// Test-only reference computations. None of these call into the library's
// linear algebra, so they stay independent of the code they check.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace holo::oracle {

using Mat = Eigen::MatrixXcd;

// exp(i s A) by Taylor summation with scaling and squaring.
inline Mat taylor_exp_i(const Mat& a, double s, int order = 30) {
  const std::complex<double> i{0.0, 1.0};
  Mat x = i * s * a;
  const double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  x /= std::pow(2.0, squarings);
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int k = 1; k <= order; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

inline std::vector<Mat> paulis() {
  const std::complex<double> i{0.0, 1.0};
  Mat id(2, 2), x(2, 2), y(2, 2), z(2, 2);
  id << 1, 0, 0, 1;
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  return {id, x, y, z};
}

// C_ij = tr(U (s_i x s_j)) / 4 with the tensor product written out
// elementwise.
inline Mat brute_force_correlation(const Mat& u) {
  const auto p = paulis();
  Mat c(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::complex<double> tr = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int a2 = 0; a2 < 2; ++a2)
            for (int b2 = 0; b2 < 2; ++b2)
              tr += u(2 * a + b, 2 * a2 + b2) * p[i](a2, a) * p[j](b2, b);
      c(i, j) = tr / 4.0;
    }
  }
  return c;
}

// Operator Schmidt coefficients via realignment R[(a a'), (b b')] =
// U[(a b), (a' b')]; singular values of R / 2 equal those of C.
inline std::vector<double> realigned_schmidt(const Mat& u) {
  Mat r(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b = 0; b < 2; ++b)
        for (int b2 = 0; b2 < 2; ++b2) r(2 * a + a2, 2 * b + b2) = u(2 * a + b, 2 * a2 + b2);
  Eigen::JacobiSVD<Mat> svd(r / 2.0);
  const Eigen::VectorXd s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

inline Mat random_hermitian(int dim, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = {g(rng), g(rng)};
  return 0.5 * (m + m.adjoint());
}

// Haar-ish random unitary from the QR of a Gaussian matrix.
inline Mat random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (int k = 0; k < dim; ++k) q.col(k) *= std::polar(1.0, std::arg(r(k, k)));
  return q;
}

// Kronecker product written out, independent of holo::kron.
inline Mat kron2(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace holo::oracle
