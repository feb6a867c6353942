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

#include "wqnd/quantum_states.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "wqnd/errors.h"

namespace wqnd {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

TEST(BellState, SignConventions) {
  const ComplexVector psi = bell_state(BellKind::kPsiMinus).amplitudes();
  EXPECT_EQ(psi, (ComplexVector(4) << 0, kS, -kS, 0).finished());
  const ComplexVector phi = bell_state(BellKind::kPhiMinus).amplitudes();
  EXPECT_EQ(phi, (ComplexVector(4) << kS, 0, 0, -kS).finished());
}

TEST(BellState, Orthonormal) {
  for (BellKind a : kAllBellKinds) {
    for (BellKind b : kAllBellKinds) {
      const double want = a == b ? 1.0 : 0.0;
      EXPECT_LE(std::abs(inner_product(bell_state(a), bell_state(b)) - want),
                1e-15);
    }
  }
}

TEST(Werner, Limits) {
  for (BellKind k : kAllBellKinds) {
    EXPECT_LE(max_abs_difference(werner(0.0, k).matrix(),
                                 ComplexMatrix::Identity(4, 4) / 4.0),
              1e-15);
    EXPECT_LE(max_abs_difference(werner(1.0, k).matrix(),
                                 bell_state(k).projector().matrix()),
              1e-15);
  }
}

TEST(Werner, HalfMixedEntries) {
  const ComplexMatrix m = werner(0.5).matrix();
  EXPECT_NEAR(m(0, 0).real(), 0.125, 1e-15);
  EXPECT_NEAR(m(1, 1).real(), 0.375, 1e-15);
  EXPECT_NEAR(m(2, 2).real(), 0.375, 1e-15);
  EXPECT_NEAR(m(3, 3).real(), 0.125, 1e-15);
  EXPECT_NEAR(m(1, 2).real(), -0.25, 1e-15);
  EXPECT_NEAR(m(2, 1).real(), -0.25, 1e-15);
}

TEST(Werner, Spectrum) {
  for (BellKind k : kAllBellKinds) {
    for (double x : {0.0, 0.2, 0.55, 0.9, 1.0}) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(werner(x, k).matrix());
      const Eigen::VectorXd w = es.eigenvalues();  // ascending
      for (int i = 0; i < 3; ++i) EXPECT_NEAR(w(i), (1 - x) / 4, 1e-14);
      EXPECT_NEAR(w(3), (1 + 3 * x) / 4, 1e-14);
      EXPECT_NEAR(werner_parameter(werner(x, k)), x, 1e-14);
    }
  }
}

TEST(Werner, RejectsOutOfRange) {
  EXPECT_THROW(werner(1.5), ConfigError);
  EXPECT_THROW(werner(-0.1), ConfigError);
}

TEST(DensityMatrix, ValidatesInvariants) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix(m, probe_layout()), NumericError);  // trace 2
  ComplexMatrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DensityMatrix(neg, probe_layout()), NumericError);
  ComplexMatrix nh(2, 2);
  nh << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(DensityMatrix(nh, probe_layout()), NumericError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(4, 4) / 4, probe_layout()),
               NumericError);
}

TEST(Fidelity, BasicValues) {
  const DensityMatrix rho = werner(0.37);
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(werner(0.0), werner(1.0)), 0.25, 1e-12);
}

TEST(Fidelity, CommutingWernerOracle) {
  EXPECT_NEAR(fidelity(werner(0.3), werner(0.7)),
              oracle::werner_fidelity_commuting(0.3, 0.7), 1e-12);
  for (double x : {0.0, 0.1, 0.5, 0.8}) {
    for (double y : {0.05, 0.4, 0.95}) {
      EXPECT_NEAR(fidelity(werner(x), werner(y)),
                  oracle::werner_fidelity_commuting(x, y), 1e-10);
      EXPECT_NEAR(fidelity(werner(x), werner(y)), fidelity(werner(y), werner(x)),
                  1e-10);
    }
  }
}

TEST(Fidelity, PureTargetIsOverlap) {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> d;
  ComplexMatrix a(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Complex(d(rng), d(rng));
  ComplexMatrix m = a * a.adjoint();
  m /= m.trace().real();
  const DensityMatrix rho(m, pair_layout());
  for (BellKind k : kAllBellKinds) {
    const PureState psi = bell_state(k);
    const double overlap =
        (psi.amplitudes().adjoint() * m * psi.amplitudes())(0, 0).real();
    EXPECT_NEAR(fidelity(rho, psi.projector()), overlap, 1e-9);
  }
}

TEST(Fidelity, LayoutMismatch) {
  EXPECT_THROW(fidelity(werner(0.5), ground_state().projector()), NumericError);
}

TEST(Expectation, ProbeSigmaZ) {
  EXPECT_NEAR(expectation(ground_state().projector(), oracle::sz()), -1.0, 0);
  EXPECT_NEAR(expectation(excited_state().projector(), oracle::sz()), 1.0, 0);
  const DensityMatrix mixed(ComplexMatrix::Identity(2, 2) / 2, probe_layout());
  EXPECT_NEAR(expectation(mixed, oracle::sz()), 0.0, 1e-15);
  for (double x : {0.0, 0.3, 1.0}) {
    const DensityMatrix probe(oracle::probe_after_gate(x), probe_layout());
    EXPECT_NEAR(expectation(probe, oracle::sz()), -x, 1e-15);
  }
  ComplexMatrix nh = ComplexMatrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  EXPECT_THROW(expectation(mixed, nh), NumericError);
}

TEST(BellRelabel, MapsPlusToMinus) {
  for (double x : {0.0, 0.3, 0.8, 1.0}) {
    EXPECT_LE(max_abs_difference(
                  bell_relabel(werner(x, BellKind::kPsiPlus)).matrix(),
                  werner(x, BellKind::kPsiMinus).matrix()),
              1e-15);
    EXPECT_LE(max_abs_difference(
                  bell_relabel(werner(x, BellKind::kPhiPlus)).matrix(),
                  werner(x, BellKind::kPhiMinus).matrix()),
              1e-15);
  }
}

TEST(BellRelabel, InvolutionAndSpectrum) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> d;
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = Complex(d(rng), d(rng));
    ComplexMatrix m = a * a.adjoint();
    m /= m.trace().real();
    const DensityMatrix rho(m, pair_layout());
    const DensityMatrix once = bell_relabel(rho, RelabelDirection::kForward);
    const DensityMatrix twice = bell_relabel(once, RelabelDirection::kInverse);
    EXPECT_LE(max_abs_difference(twice.matrix(), rho.matrix()), 1e-15);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> e1(rho.matrix()), e2(once.matrix());
    EXPECT_LE((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(bell_relabel(ground_state().projector()), NumericError);
}

TEST(SampleMeasurement, GroundStateIsDeterministic) {
  const MeasurementRecord r =
      sample_measurement(ground_state().projector(), "z", 1000, 42);
  EXPECT_EQ(r.counts.at("g"), 1000);
  EXPECT_EQ(r.counts.at("e"), 0);
  EXPECT_EQ(r.shots, 1000);
}

TEST(SampleMeasurement, ReproducibleForSeed) {
  const DensityMatrix probe(oracle::probe_after_gate(0.5), probe_layout());
  const MeasurementRecord a = sample_measurement(probe, "z", 5000, 9);
  const MeasurementRecord b = sample_measurement(probe, "z", 5000, 9);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.counts.at("e") + a.counts.at("g"), 5000);
}

TEST(SampleMeasurement, BinomialConcentration) {
  const DensityMatrix probe(oracle::probe_after_gate(0.5), probe_layout());
  const double p = 0.25;
  const std::int64_t shots = 1'000'000;
  const double sigma = std::sqrt(p * (1 - p) / shots);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const MeasurementRecord r = sample_measurement(probe, "z", shots, seed);
    EXPECT_LE(std::abs(r.frequency("e") - p), 5 * sigma) << "seed " << seed;
  }
}

TEST(SampleMeasurement, Errors) {
  const DensityMatrix probe = ground_state().projector();
  EXPECT_THROW(sample_measurement(probe, "x", 10, 0), ConfigError);
  EXPECT_THROW(sample_measurement(probe, "z", 0, 0), ConfigError);
  EXPECT_THROW(sample_measurement(werner(0.5), "z", 10, 0), NumericError);
}

}  // namespace
}  // namespace wqnd
