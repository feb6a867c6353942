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

#include "wqnd/model_operators.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.h"
#include "wqnd/dynamics.h"
#include "wqnd/errors.h"

namespace wqnd {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Pauli, LocalBlocks) {
  EXPECT_EQ(pauli_local(PauliAxis::kX), oracle::sx());
  EXPECT_EQ(pauli_local(PauliAxis::kZ), oracle::sz());
  EXPECT_EQ(pauli_local(PauliAxis::kMinus), oracle::sminus());
  EXPECT_EQ(pauli_local(PauliAxis::kPlus) + pauli_local(PauliAxis::kMinus),
            pauli_local(PauliAxis::kX));
  const ComplexMatrix y = pauli_local(PauliAxis::kY);
  EXPECT_LE(max_abs_difference(y * y, ComplexMatrix::Identity(2, 2)), 0.0);
  EXPECT_LE(max_abs_difference(pauli_local(PauliAxis::kX) * y,
                               Complex(0, 1) * pauli_local(PauliAxis::kZ)),
            0.0);
}

TEST(Pauli, RaisingTakesGroundToExcited) {
  const ComplexVector e =
      pauli_local(PauliAxis::kPlus) * ground_state().amplitudes();
  EXPECT_EQ(e, excited_state().amplitudes());
}

TEST(Pauli, EmbeddedAndUnknownLabel) {
  const ComplexMatrix z3 = pauli(PauliAxis::kZ, "q3", three_qubit_layout());
  EXPECT_EQ(z3, oracle::kron3(oracle::id2(), oracle::id2(), oracle::sz()));
  EXPECT_THROW(pauli(PauliAxis::kZ, "q4", three_qubit_layout()), NumericError);
}

TEST(QndUnitary, Entries) {
  const ComplexMatrix u = qnd_unitary();
  // Entries are 1-based in the printed matrix.
  EXPECT_EQ(u(0, 0), Complex(0.5, 0));
  EXPECT_EQ(u(6, 0), Complex(-0.5, 0));
  EXPECT_EQ(u(3, 0), Complex(0, -0.5));
  EXPECT_TRUE(check_unitary(u, 1e-12));
  EXPECT_LE(max_abs_difference(u, oracle::qnd_unitary_expansion()), 1e-15);
}

TEST(PairUnitary, EntriesAndExponential) {
  const ComplexMatrix u = pair_unitary();
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(u(i, i).real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(u(i, 3 - i).imag(), -1 / std::sqrt(2.0), 1e-15);
  }
  EXPECT_TRUE(check_unitary(u, 1e-12));
  const ComplexMatrix xx = kron(oracle::sx(), oracle::sx());
  EXPECT_LE(max_abs_difference(hermitian_expm(0.5 * xx, kPi / 2), u), 1e-12);
}

TEST(HEff, HermitianTraceless) {
  const ComplexMatrix h = h_eff({0.7, 0.7, 0.7});
  EXPECT_TRUE(check_hermitian(h, 0.0));
  EXPECT_LE(std::abs(h.trace()), 1e-15);
  const ComplexMatrix want =
      0.35 * (oracle::kron3(oracle::sx(), oracle::id2(), oracle::sx()) +
              oracle::kron3(oracle::id2(), oracle::sx(), oracle::sx()));
  EXPECT_LE(max_abs_difference(h, want), 1e-15);
}

TEST(HEff, GateTimeOddMultiples) {
  for (int n : {0, 1, 2, 3}) {
    const double lambda = 0.4;
    const ComplexMatrix u = hermitian_expm(h_eff({lambda, lambda, lambda}),
                                           (2 * n + 1) * kPi / (2 * lambda));
    // The spectrum is {0, +-lambda}: even n gives the gate, odd n its inverse.
    const ComplexMatrix want = n % 2 ? ComplexMatrix(qnd_unitary().adjoint()) : qnd_unitary();
    EXPECT_LE(max_abs_difference(u, want), 1e-10);
  }
}

TEST(HPair, SumCommutatorAndGate) {
  const EffectiveParams p{1.3, 1.3, 1.3};
  EXPECT_LE(max_abs_difference(h_pair(p, 1) + h_pair(p, 2), h_eff(p)), 1e-15);
  EXPECT_LE(commutator(h_pair({1, 0.8, 1.9}, 1), h_pair({1, 0.8, 1.9}, 2))
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
  const EffectiveParams q{1.0, 0.6, 2.0};
  const ComplexMatrix u1 = hermitian_expm(h_pair(q, 1), kPi / (2 * q.lambda1));
  EXPECT_LE(max_abs_difference(
                u1, embed_operator(pair_unitary(), three_qubit_layout(), {"q1", "q3"})),
            1e-12);
  const ComplexMatrix u2 = hermitian_expm(h_pair(q, 2), kPi / (2 * q.lambda2));
  EXPECT_LE(max_abs_difference(
                u2, embed_operator(pair_unitary(), three_qubit_layout(), {"q2", "q3"})),
            1e-12);
  EXPECT_THROW(h_pair(q, 3), ConfigError);
}

TEST(EffectiveCoupling, Arithmetic) {
  EXPECT_DOUBLE_EQ(effective_coupling(1, 20), 0.05);
  EXPECT_DOUBLE_EQ(effective_coupling(2, 20), 0.2);
  EXPECT_THROW(effective_coupling(1, 0), ConfigError);
  EXPECT_TRUE(large_detuning_regime(1, 20));
  EXPECT_FALSE(large_detuning_regime(1, 2));
}

TEST(DarkStates, AnnihilatedAndOrthonormal) {
  const auto dark = dark_states();
  const ComplexMatrix h = h_eff({1.0, 1.0, 1.0});
  for (std::size_t i = 0; i < dark.size(); ++i) {
    EXPECT_LE((h * dark[i].amplitudes()).norm(), 1e-12);
    for (std::size_t j = 0; j < dark.size(); ++j) {
      EXPECT_NEAR(std::abs(inner_product(dark[i], dark[j])), i == j ? 1 : 0,
                  1e-15);
    }
  }
  // phi1 and phi3 share the pair factor.
  const DensityMatrix r1 = dark[0].projector().reduce({"q1", "q2"});
  const DensityMatrix r3 = dark[2].projector().reduce({"q1", "q2"});
  EXPECT_LE(max_abs_difference(r1.matrix(), r3.matrix()), 1e-15);
}

TEST(HEff, AnnihilatesSingletTimesAnyProbe) {
  const ComplexMatrix h = h_eff({});
  const ComplexVector psi = bell_state(BellKind::kPsiMinus).amplitudes();
  ComplexVector v(2);
  v << Complex(0.6, 0.1), Complex(-0.2, 0.77);
  v.normalize();
  EXPECT_LE((h * kron(psi, v)).norm(), 1e-12);
}

TEST(QndUnitary, PreservesMinusWernerForEveryProbe) {
  const ComplexMatrix u = qnd_unitary();
  ComplexMatrix probe(2, 2);
  probe << 0.3, Complex(0.1, -0.2), Complex(0.1, 0.2), 0.7;
  const DensityMatrix rho3(probe, probe_layout());
  for (BellKind k : {BellKind::kPsiMinus, BellKind::kPhiMinus}) {
    for (double x = 0; x <= 1.0 + 1e-12; x += 0.125) {
      const DensityMatrix in = tensor(werner(x, k), rho3);
      const DensityMatrix out = conjugate(in, u).reduce({"q1", "q2"});
      EXPECT_LE(max_abs_difference(out.matrix(), werner(x, k).matrix()), 1e-12)
          << to_string(k) << " x = " << x;
    }
  }
}

TEST(QndUnitary, DisturbsPlusWerner) {
  const ComplexMatrix u = qnd_unitary();
  const DensityMatrix in =
      tensor(werner(0.6, BellKind::kPsiPlus), ground_state().projector());
  const DensityMatrix out = conjugate(in, u).reduce({"q1", "q2"});
  EXPECT_GT(max_abs_difference(out.matrix(), werner(0.6, BellKind::kPsiPlus).matrix()),
            1e-3);
}

TEST(FullHamiltonian, Structure) {
  FullModelParams p = FullModelParams::resonant(1.0, 20.0, 10.0, 2);
  const FullModel m = full_hamiltonian(p);
  EXPECT_EQ(m.layout.total_dim(), 8 * 9);
  EXPECT_TRUE(check_hermitian(m.hamiltonian, 1e-12));
  // <e g g, 0 0| H |g g g, 1 0> = g for atom 1 and cavity A.
  // Digits (q1, q2, q3, A, B); q = 0 is |e>, q = 1 is |g>.
  auto index = [&](int q1, int q2, int q3, int a, int b) {
    return (((q1 * 2 + q2) * 2 + q3) * 3 + a) * 3 + b;
  };
  EXPECT_EQ(m.hamiltonian(index(0, 1, 1, 0, 0), index(1, 1, 1, 1, 0)),
            Complex(1.0, 0));
  EXPECT_EQ(m.hamiltonian(index(1, 1, 0, 0, 0), index(1, 1, 1, 0, 1)),
            Complex(1.0, 0));
  // Two photons in A couple with sqrt(2) g.
  EXPECT_NEAR(m.hamiltonian(index(0, 1, 1, 1, 0), index(1, 1, 1, 2, 0)).real(),
              std::sqrt(2.0), 1e-15);
  // Drive on atom 3.
  EXPECT_NEAR(m.hamiltonian(index(1, 1, 0, 0, 0), index(1, 1, 1, 0, 0)).real(),
              p.omega_drive, 1e-15);
  EXPECT_THROW(
      full_hamiltonian([] {
        FullModelParams q;
        q.n_max = 0;
        return q;
      }()),
      ConfigError);
}

TEST(FullHamiltonian, UncoupledIsDiagonalDetunings) {
  FullModelParams p = FullModelParams::resonant(1.0, 20.0, 10.0, 1);
  p.g = 0.0;
  p.omega_drive = 0.0;
  const FullModel m = full_hamiltonian(p);
  const ComplexMatrix& h = m.hamiltonian;
  EXPECT_LE((h - ComplexMatrix(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff(),
            0.0);
  // Single photon in A: nu - omega_laser = -delta.
  EXPECT_NEAR(h(7 * 4 + 2, 7 * 4 + 2).real(), -20.0, 1e-12);
  // Atom 1 excited: omega1 - omega_laser = -lambda.
  EXPECT_NEAR(h(3 * 4, 3 * 4).real(), -0.05, 1e-12);
}

TEST(DispersiveHamiltonian, Hermitian) {
  EXPECT_TRUE(check_hermitian(dispersive_hamiltonian(0.05, 0.5), 0.0));
}

TEST(ProbeDecay, Channel) {
  const LindbladChannel c = probe_decay(0.1);
  EXPECT_EQ(c.rate, 0.1);
  EXPECT_EQ(c.collapse, oracle::kron3(oracle::id2(), oracle::id2(), oracle::sminus()));
  EXPECT_THROW(probe_decay(-1.0), ConfigError);
}

}  // namespace
}  // namespace wqnd
