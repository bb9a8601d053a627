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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "holo/errors.hpp"
#include "holo/model.hpp"
#include "oracles.hpp"

namespace holo {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ExpIHermitian, SigmaZTimesPiIsMinusIdentity) {
  const ComplexMatrix u = exp_i_hermitian(pauli::z(), kPi);
  EXPECT_LT(max_abs(u + pauli::identity(2)), 1e-15);
}

TEST(ExpIHermitian, ZeroExponentIsIdentity) {
  std::mt19937_64 rng(7);
  const ComplexMatrix a = oracle::random_hermitian(4, rng);
  EXPECT_LT(max_abs(exp_i_hermitian(a, 0.0) - pauli::identity(4)), 1e-15);
}

TEST(ExpIHermitian, MatchesTaylorOracle) {
  const double beta = kPi / 4;
  const ComplexMatrix a = -std::cos(beta) * pauli::x() + std::sin(beta) * pauli::z();
  const double s = kPi * std::sin(beta);
  const ComplexMatrix got = exp_i_hermitian(a, s);
  EXPECT_LT(max_abs(got - oracle::taylor_exp_i(a, s)), 1e-12);
  EXPECT_LT(unitarity_defect(got), 1e-12);
}

TEST(ExpIHermitian, RejectsNonHermitian) {
  ComplexMatrix a = pauli::x();
  a(0, 1) = 2.0;
  EXPECT_THROW(exp_i_hermitian(a, 1.0), ValidationError);
}

TEST(ExpIHermitian, InverseProperty) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> s_dist(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = trial % 2 ? 4 : 2;
    const ComplexMatrix a = oracle::random_hermitian(dim, rng);
    const double s = s_dist(rng);
    const ComplexMatrix prod = exp_i_hermitian(a, s) * exp_i_hermitian(a, -s);
    ASSERT_LT(max_abs(prod - pauli::identity(dim)), 1e-11) << "trial " << trial;
  }
}

TEST(EigHermitian, SigmaZ) {
  const auto e = eig_hermitian(pauli::z());
  EXPECT_DOUBLE_EQ(e.values(0), -1.0);
  EXPECT_DOUBLE_EQ(e.values(1), 1.0);
}

TEST(EigHermitian, OneQubitInvariantAtTimeZero) {
  const OneQubitParams p{0.5, 0.5, 1.0};
  const auto e = eig_hermitian(one_qubit_invariant(p, 0.0));
  EXPECT_NEAR(e.values(0), -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(e.values(1), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(EigHermitian, DegenerateIdentity) {
  const auto e = eig_hermitian(pauli::identity(2));
  EXPECT_DOUBLE_EQ(e.values(0), 1.0);
  EXPECT_DOUBLE_EQ(e.values(1), 1.0);
  EXPECT_LT(max_abs(e.vectors.adjoint() * e.vectors - pauli::identity(2)), 1e-15);
}

TEST(EigHermitian, ReconstructionAndGaugeProperty) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = trial % 2 ? 4 : 2;
    const ComplexMatrix a = oracle::random_hermitian(dim, rng, 2.0);
    const auto e = eig_hermitian(a);
    ComplexMatrix rebuilt = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
      const auto v = e.vectors.col(k);
      ASSERT_LT((a * v - e.values(k) * v).cwiseAbs().maxCoeff(), 1e-11);
      rebuilt += e.values(k) * v * v.adjoint();
      if (k > 0) ASSERT_LE(e.values(k - 1), e.values(k));
      // First nonzero component real and positive.
      for (int i = 0; i < dim; ++i) {
        if (std::abs(v(i)) > 1e-12) {
          ASSERT_GT(v(i).real(), 0.0);
          ASSERT_EQ(v(i).imag(), 0.0);
          break;
        }
      }
    }
    ASSERT_LT(max_abs(rebuilt - a), 1e-10);
    ASSERT_LT(max_abs(e.vectors.adjoint() * e.vectors - pauli::identity(dim)), 1e-11);
  }
}

TEST(SingularValues, TrivialCases) {
  const auto id = singular_values(pauli::identity(4));
  for (double s : id) EXPECT_NEAR(s, 1.0, 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d(0, 0) = 3.0;
  const auto sv = singular_values(d);
  EXPECT_DOUBLE_EQ(sv[0], 3.0);
  EXPECT_DOUBLE_EQ(sv[1], 0.0);
  EXPECT_DOUBLE_EQ(sv[3], 0.0);
}

TEST(SingularValues, CnotCorrelationMatrix) {
  Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  const auto sv = singular_values(oracle::brute_force_correlation(cnot));
  EXPECT_NEAR(sv[0], std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(sv[1], std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(sv[2], 0.0, 1e-12);
  EXPECT_NEAR(sv[3], 0.0, 1e-12);
}

TEST(SingularValues, SquaresSumToFrobenius) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = oracle::random_hermitian(4, rng) + kI * oracle::random_hermitian(4, rng);
    double sum = 0.0;
    const auto sv = singular_values(m);
    for (double s : sv) sum += s * s;
    ASSERT_NEAR(sum, m.squaredNorm(), 1e-12 * std::max(1.0, m.squaredNorm()));
    for (std::size_t k = 1; k < sv.size(); ++k) ASSERT_GE(sv[k - 1], sv[k]);
  }
}

TEST(UnitaryDistance, Basics) {
  std::mt19937_64 rng(9);
  const ComplexMatrix u = oracle::random_unitary(4, rng);
  EXPECT_EQ(unitary_distance(u, u), 0.0);
  EXPECT_LT(unitary_distance(u, -u), 1e-15);
  EXPECT_NEAR(unitary_distance(pauli::identity(2), pauli::x()), 1.0, 1e-15);
  EXPECT_THROW(unitary_distance(pauli::identity(2), pauli::identity(4)), ValidationError);
}

TEST(UnitaryDistance, SymmetricAndPhaseBlind) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = trial % 2 ? 4 : 2;
    const ComplexMatrix u = oracle::random_unitary(dim, rng);
    const ComplexMatrix v = oracle::random_unitary(dim, rng);
    ASSERT_NEAR(unitary_distance(u, v), unitary_distance(v, u), 1e-14);
    ASSERT_LT(unitary_distance(u, std::polar(1.0, phase(rng)) * u), 1e-14);
    const double d = unitary_distance(u, v);
    ASSERT_GE(d, 0.0);
    ASSERT_LE(d, 1.0);
    // Agrees with the literal formula where that one is well conditioned.
    const double literal =
        std::sqrt(std::max(0.0, 1.0 - std::abs((u.adjoint() * v).trace()) / dim));
    ASSERT_NEAR(d, literal, 1e-7);
  }
}

TEST(UnitaryDistance, LinearInSmallPerturbation) {
  const ComplexMatrix u = pauli::identity(2);
  const ComplexMatrix v = exp_i_hermitian(pauli::x(), 1e-9);
  // 1 - cos(eps) ~ eps^2 / 2, so the distance is eps / sqrt(2).
  EXPECT_NEAR(unitary_distance(u, v), 1e-9 / std::sqrt(2.0), 1e-15);
}

TEST(Validation, GateDimensions) {
  EXPECT_NO_THROW(require_gate_dim(pauli::identity(2)));
  EXPECT_NO_THROW(require_gate_dim(pauli::identity(4)));
  EXPECT_THROW(require_gate_dim(ComplexMatrix::Identity(3, 3)), ValidationError);
  EXPECT_THROW(require_unitary(2.0 * pauli::identity(2)), ValidationError);
}

}  // namespace
}  // namespace holo
