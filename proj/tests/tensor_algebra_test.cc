// Copyright 2026 The Werner QND Authors
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

#include "wqnd/tensor_algebra.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "wqnd/errors.h"
#include "wqnd/model_operators.h"

namespace wqnd {
namespace {

ComplexMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  ComplexMatrix m = random_matrix(n, rng);
  return 0.5 * (m + m.adjoint());
}

TEST(SubsystemLayout, BigEndianDigits) {
  const SubsystemLayout l = qubit_layout({"q1", "q2", "q3"});
  EXPECT_EQ(l.total_dim(), 8);
  EXPECT_EQ(l.digits(0), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(l.digits(5), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(l.digits(6), (std::vector<int>{1, 1, 0}));
}

TEST(SubsystemLayout, RejectsDuplicateLabels) {
  EXPECT_THROW(qubit_layout({"q1", "q1"}), NumericError);
  EXPECT_THROW(SubsystemLayout({{"a", 0}}), NumericError);
}

TEST(Kron, IdentityAndDiagonal) {
  EXPECT_TRUE(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2))
                  .isApprox(ComplexMatrix::Identity(4, 4)));
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  ComplexMatrix want = ComplexMatrix::Zero(4, 4);
  want.diagonal() << 1, 1, 2, 2;
  EXPECT_EQ(max_abs_difference(kron(d, ComplexMatrix::Identity(2, 2)), want), 0.0);
}

TEST(Kron, MatchesEigenKroneckerProduct) {
  std::mt19937_64 rng(7);
  const ComplexMatrix a = random_matrix(2, rng), b = random_matrix(3, rng);
  const ComplexMatrix ref = Eigen::kroneckerProduct(a, b).eval();
  EXPECT_LE(max_abs_difference(kron(a, b), ref), 1e-15);
}

TEST(Kron, TraceIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(2 + trial % 3, rng);
    const ComplexMatrix b = random_matrix(2 + trial % 2, rng);
    EXPECT_LE(std::abs(kron(a, b).trace() - a.trace() * b.trace()), 1e-12);
  }
}

TEST(Dagger, InvolutionAndGateUnitarity) {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_matrix(4, rng);
  EXPECT_EQ(max_abs_difference(dagger(dagger(a)), a), 0.0);
  EXPECT_EQ(max_abs_difference(dagger(ComplexMatrix::Identity(3, 3)),
                               ComplexMatrix::Identity(3, 3)),
            0.0);
  const ComplexMatrix u = qnd_unitary();
  EXPECT_LE(max_abs_difference(dagger(u) * u, ComplexMatrix::Identity(8, 8)),
            1e-12);
}

TEST(EmbedOperator, SingleTargetOnLastQubit) {
  const SubsystemLayout l = qubit_layout({"q1", "q2", "q3"});
  const ComplexMatrix got = embed_operator(oracle::sx(), l, {"q3"});
  const ComplexMatrix want = oracle::kron3(oracle::id2(), oracle::id2(), oracle::sx());
  EXPECT_EQ(max_abs_difference(got, want), 0.0);
}

TEST(EmbedOperator, NonAdjacentPairMatchesKronecker) {
  const SubsystemLayout l = qubit_layout({"q1", "q2", "q3"});
  const ComplexMatrix got =
      embed_operator(kron(oracle::sx(), oracle::sz()), l, {"q1", "q3"});
  EXPECT_EQ(max_abs_difference(got, oracle::kron3(oracle::sx(), oracle::id2(),
                                                  oracle::sz())),
            0.0);
  // Reversed target order swaps the roles of the two tensor slots.
  const ComplexMatrix rev =
      embed_operator(kron(oracle::sx(), oracle::sz()), l, {"q3", "q1"});
  EXPECT_EQ(max_abs_difference(rev, oracle::kron3(oracle::sz(), oracle::id2(),
                                                  oracle::sx())),
            0.0);
}

TEST(EmbedOperator, PairGatesFactorizeJointGate) {
  const SubsystemLayout& l = three_qubit_layout();
  const ComplexMatrix u13 = embed_operator(pair_unitary(), l, {"q1", "q3"});
  const ComplexMatrix u23 = embed_operator(pair_unitary(), l, {"q2", "q3"});
  EXPECT_LE(max_abs_difference(u13 * u23, qnd_unitary()), 1e-12);
  // The two factors commute.
  EXPECT_LE(max_abs_difference(u13 * u23, u23 * u13), 1e-12);
}

TEST(EmbedOperator, RespectsComposition) {
  std::mt19937_64 rng(5);
  SubsystemLayout l({{"a", 2}, {"b", 3}, {"c", 2}});
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = random_matrix(4, rng), b = random_matrix(4, rng);
    const ComplexMatrix lhs = embed_operator(a * b, l, {"c", "a"});
    const ComplexMatrix rhs =
        embed_operator(a, l, {"c", "a"}) * embed_operator(b, l, {"c", "a"});
    EXPECT_LE(max_abs_difference(lhs, rhs), 1e-12);
  }
}

TEST(EmbedOperator, Errors) {
  const SubsystemLayout l = qubit_layout({"q1", "q2"});
  EXPECT_THROW(embed_operator(oracle::sx(), l, {"q9"}), NumericError);
  EXPECT_THROW(embed_operator(ComplexMatrix::Identity(4, 4), l, {"q1", "q1"}),
               NumericError);
  EXPECT_THROW(embed_operator(ComplexMatrix::Identity(4, 4), l, {"q1"}),
               NumericError);
}

TEST(PartialTrace, ProductStateKeepsFirstFactor) {
  std::mt19937_64 rng(13);
  const ComplexMatrix a = random_matrix(2, rng), b = random_matrix(3, rng);
  SubsystemLayout l({{"a", 2}, {"b", 3}});
  const ReducedOperator r = partial_trace(kron(a, b), l, {"a"});
  EXPECT_LE(max_abs_difference(r.matrix, a * b.trace()), 1e-12);
  EXPECT_EQ(r.layout, SubsystemLayout({{"a", 2}}));
  const ReducedOperator rb = partial_trace(kron(a, b), l, {"b"});
  EXPECT_LE(max_abs_difference(rb.matrix, b * a.trace()), 1e-12);
}

TEST(PartialTrace, KeepsOriginalOrderAndTrace) {
  std::mt19937_64 rng(17);
  SubsystemLayout l({{"a", 2}, {"b", 3}, {"c", 2}});
  const ComplexMatrix m = random_matrix(12, rng);
  const ReducedOperator r = partial_trace(m, l, {"c", "a"});
  EXPECT_EQ(r.layout, SubsystemLayout({{"a", 2}, {"c", 2}}));
  EXPECT_LE(std::abs(r.matrix.trace() - m.trace()), 1e-12);
  const ReducedOperator all = partial_trace(m, l, {"a", "b", "c"});
  EXPECT_LE(max_abs_difference(all.matrix, m), 0.0);
}

TEST(PartialTrace, EmptyKeepIsAnError) {
  const SubsystemLayout l = qubit_layout({"q1"});
  EXPECT_THROW(partial_trace(ComplexMatrix::Identity(2, 2), l,
                             std::span<const std::string>()),
               NumericError);
}

TEST(HermitianExpm, ZeroGeneratorAndPauliPeriod) {
  EXPECT_LE(max_abs_difference(hermitian_expm(ComplexMatrix::Zero(3, 3), 1.7),
                               ComplexMatrix::Identity(3, 3)),
            1e-15);
  EXPECT_LE(max_abs_difference(hermitian_expm(oracle::sx(), std::numbers::pi),
                               -ComplexMatrix::Identity(2, 2)),
            1e-12);
}

TEST(HermitianExpm, EffectiveHamiltonianGivesJointGateExactly) {
  for (double lambda : {0.05, 1.0, 2.5}) {
    const ComplexMatrix u =
        hermitian_expm(h_eff({lambda, lambda, lambda}),
                       std::numbers::pi / (2 * lambda));
    EXPECT_LE(max_abs_difference(u, oracle::qnd_unitary_expansion()), 1e-12)
        << "lambda = " << lambda;
  }
}

TEST(HermitianExpm, GroupPropertyAndGeneralExpm) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix h = random_hermitian(6, rng);
    const double t1 = 0.3 * trial, t2 = 1.1 - 0.05 * trial;
    EXPECT_LE(max_abs_difference(hermitian_expm(h, t1) * hermitian_expm(h, t2),
                                 hermitian_expm(h, t1 + t2)),
              1e-10);
    EXPECT_TRUE(check_unitary(hermitian_expm(h, t1)));
    const ComplexMatrix ref = oracle::general_expm(Complex(0, -1) * h, t2);
    EXPECT_LE(max_abs_difference(hermitian_expm(h, t2), ref), 1e-10);
  }
}

TEST(HermitianExpm, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_expm(m, 1.0), NumericError);
}

TEST(Checks, UnitaryHermitianDistance) {
  EXPECT_TRUE(check_unitary(qnd_unitary()));
  EXPECT_TRUE(check_hermitian(h_eff({})));
  EXPECT_FALSE(check_unitary(2.0 * ComplexMatrix::Identity(2, 2)));
  std::mt19937_64 rng(23);
  const ComplexMatrix a = random_matrix(3, rng);
  EXPECT_EQ(frobenius_distance(a, a), 0.0);
  EXPECT_GT(frobenius_distance(a, a + ComplexMatrix::Identity(3, 3)), 0.0);
  EXPECT_THROW(frobenius_distance(a, ComplexMatrix::Identity(2, 2)),
               NumericError);
}

}  // namespace
}  // namespace wqnd
