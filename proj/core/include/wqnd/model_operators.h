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

#ifndef WQND_MODEL_OPERATORS_H_
#define WQND_MODEL_OPERATORS_H_

#include <array>
#include <string>

#include "wqnd/quantum_states.h"
#include "wqnd/tensor_algebra.h"

namespace wqnd {

enum class PauliAxis { kX, kY, kZ, kPlus, kMinus };

// 2x2 operator in the (|e>, |g>) basis: sigma_z = diag(1, -1),
// sigma_+ = |e><g|, sigma_- = |g><e|.
ComplexMatrix pauli_local(PauliAxis axis);
ComplexMatrix pauli(PauliAxis axis, const std::string& qubit,
                    const SubsystemLayout& layout);

// Layout {q1, q2, q3}: the measured pair followed by the probe.
const SubsystemLayout& three_qubit_layout();

// The 8x8 joint QND gate, entered literally. Equals
// (I - i X1 X3 - i X2 X3 - X1 X2) / 2.
ComplexMatrix qnd_unitary();

// The 4x4 two-body gate (I - i X (x) X) / sqrt2 applied to (q1, q3) and then
// (q2, q3) in the separated-cavity protocol.
ComplexMatrix pair_unitary();

// Effective atom-atom couplings in units of the cavity coupling g.
struct EffectiveParams {
  double lambda = 1.0;
  double lambda1 = 1.0;
  double lambda2 = 1.0;

  void validate() const;
};

// (lambda / 2) (X1 + X2) X3 on {q1, q2, q3}.
ComplexMatrix h_eff(const EffectiveParams& p);

// which = 1: (lambda1 / 2) X1 X3; which = 2: (lambda2 / 2) X2 X3.
ComplexMatrix h_pair(const EffectiveParams& p, int which);

// lambda = g^2 / delta.
double effective_coupling(double g, double delta);

// True when delta >= 10 g, the regime in which adiabatic elimination of the
// cavity modes is trusted.
bool large_detuning_regime(double g, double delta);

// Parameters of the driven three-atom, two-cavity model. Frequencies are
// absolute; the Hamiltonian is built in the frame rotating at omega_laser.
struct FullModelParams {
  double g = 1.0;
  double delta = 20.0;        // omega3 - nu
  double omega_drive = 0.5;   // classical drive amplitude on atom 3
  double nu = 0.0;            // cavity frequency (both modes)
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
  double omega_laser = 0.0;
  int n_max = 2;              // photon cutoff per cavity

  // omega3 = nu + delta, omega1 = omega2 = omega3 - g^2/delta,
  // omega_laser = omega3, drive = drive_ratio * g^2/delta.
  static FullModelParams resonant(double g, double delta, double drive_ratio,
                                  int n_max, double nu = 0.0);

  double lambda() const { return effective_coupling(g, delta); }
  void validate() const;
};

struct FullModel {
  ComplexMatrix hamiltonian;
  // {q1, q2, q3, A, B} with Fock factors of dimension n_max + 1.
  SubsystemLayout layout;
};

// Two-mode cavity QED Hamiltonian in the frame rotating at omega_laser:
//   sum_i (omega_i - wL) s+_i s-_i + (nu - wL)(a'a + b'b)
//   + g (s+_1 a + s+_2 b + s+_3 a + s+_3 b + h.c.) + Omega (s+_3 + s-_3).
FullModel full_hamiltonian(const FullModelParams& p);

// Cavity-eliminated model
//   lambda (s+_3 s-_1 + s+_3 s-_2 + h.c.) + Omega (s+_3 + s-_3).
ComplexMatrix dispersive_hamiltonian(double lambda, double omega_drive);

// phi1 = Psi- g, phi2 = Phi- g, phi3 = Psi- e, phi4 = Phi- e.
std::array<PureState, 4> dark_states();

// Collapse operator L with rate gamma entering the dissipator as
// gamma (2 L rho L' - L'L rho - rho L'L).
struct LindbladChannel {
  ComplexMatrix collapse;
  double rate = 0.0;
};

// Spontaneous emission of the probe, sigma_- on q3.
LindbladChannel probe_decay(double gamma,
                            const SubsystemLayout& layout = three_qubit_layout());

}  // namespace wqnd

#endif  // WQND_MODEL_OPERATORS_H_
