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
#include <sstream>

#include "wqnd/errors.h"

namespace wqnd {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix annihilation(int n_max) {
  ComplexMatrix a = ComplexMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

}  // namespace

ComplexMatrix pauli_local(PauliAxis axis) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (axis) {
    case PauliAxis::kX:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliAxis::kY:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case PauliAxis::kZ:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case PauliAxis::kPlus:
      m(0, 1) = 1.0;
      break;
    case PauliAxis::kMinus:
      m(1, 0) = 1.0;
      break;
  }
  return m;
}

ComplexMatrix pauli(PauliAxis axis, const std::string& qubit,
                    const SubsystemLayout& layout) {
  if (layout.dim_of(qubit) != 2) {
    throw NumericError("pauli: factor '" + qubit + "' is not a qubit");
  }
  return embed_operator(pauli_local(axis), layout, {qubit});
}

const SubsystemLayout& three_qubit_layout() {
  static const SubsystemLayout layout = qubit_layout({"q1", "q2", "q3"});
  return layout;
}

ComplexMatrix qnd_unitary() {
  const Complex o(1.0, 0.0), z(0.0, 0.0), m(-1.0, 0.0), j(0.0, -1.0);
  ComplexMatrix u(8, 8);
  u << o, z, z, j, z, j, m, z,
       z, o, j, z, j, z, z, m,
       z, j, o, z, m, z, z, j,
       j, z, z, o, z, m, j, z,
       z, j, m, z, o, z, z, j,
       j, z, z, m, z, o, j, z,
       m, z, z, j, z, j, o, z,
       z, m, j, z, j, z, z, o;
  return 0.5 * u;
}

ComplexMatrix pair_unitary() {
  const Complex o(1.0, 0.0), z(0.0, 0.0), j(0.0, -1.0);
  ComplexMatrix u(4, 4);
  u << o, z, z, j,
       z, o, j, z,
       z, j, o, z,
       j, z, z, o;
  return u / std::sqrt(2.0);
}

void EffectiveParams::validate() const {
  if (!(lambda > 0.0) || !(lambda1 > 0.0) || !(lambda2 > 0.0)) {
    throw ConfigError("effective couplings lambda, lambda1, lambda2 must be > 0");
  }
}

ComplexMatrix h_eff(const EffectiveParams& p) {
  const SubsystemLayout& l = three_qubit_layout();
  const ComplexMatrix x1 = pauli(PauliAxis::kX, "q1", l);
  const ComplexMatrix x2 = pauli(PauliAxis::kX, "q2", l);
  const ComplexMatrix x3 = pauli(PauliAxis::kX, "q3", l);
  return 0.5 * p.lambda * (x1 + x2) * x3;
}

ComplexMatrix h_pair(const EffectiveParams& p, int which) {
  const SubsystemLayout& l = three_qubit_layout();
  const ComplexMatrix xx = kron(pauli_local(PauliAxis::kX),
                                pauli_local(PauliAxis::kX));
  switch (which) {
    case 1:
      return 0.5 * p.lambda1 * embed_operator(xx, l, {"q1", "q3"});
    case 2:
      return 0.5 * p.lambda2 * embed_operator(xx, l, {"q2", "q3"});
    default:
      throw ConfigError("h_pair: cavity index must be 1 or 2");
  }
}

double effective_coupling(double g, double delta) {
  if (delta == 0.0) throw ConfigError("effective_coupling: zero detuning");
  return g * g / delta;
}

bool large_detuning_regime(double g, double delta) {
  return delta >= 10.0 * std::abs(g);
}

FullModelParams FullModelParams::resonant(double g, double delta,
                                          double drive_ratio, int n_max,
                                          double nu) {
  FullModelParams p;
  p.g = g;
  p.delta = delta;
  p.nu = nu;
  p.n_max = n_max;
  const double lambda = effective_coupling(g, delta);
  p.omega3 = nu + delta;
  p.omega1 = p.omega3 - lambda;
  p.omega2 = p.omega3 - lambda;
  p.omega_laser = p.omega3;
  p.omega_drive = drive_ratio * lambda;
  return p;
}

void FullModelParams::validate() const {
  if (!(delta > 0.0)) throw ConfigError("full model: delta must be > 0");
  if (n_max < 1) throw ConfigError("full model: n_max must be >= 1");
  if (!std::isfinite(g) || !std::isfinite(omega_drive)) {
    throw ConfigError("full model: non-finite coupling");
  }
}

FullModel full_hamiltonian(const FullModelParams& p) {
  p.validate();
  const int nf = p.n_max + 1;
  SubsystemLayout layout({{"q1", 2}, {"q2", 2}, {"q3", 2}, {"A", nf}, {"B", nf}});

  const ComplexMatrix a = embed_operator(annihilation(p.n_max), layout, {"A"});
  const ComplexMatrix b = embed_operator(annihilation(p.n_max), layout, {"B"});
  const ComplexMatrix s1 = pauli(PauliAxis::kPlus, "q1", layout);
  const ComplexMatrix s2 = pauli(PauliAxis::kPlus, "q2", layout);
  const ComplexMatrix s3 = pauli(PauliAxis::kPlus, "q3", layout);

  const double wl = p.omega_laser;
  ComplexMatrix h = (p.omega1 - wl) * s1 * s1.adjoint() +
                    (p.omega2 - wl) * s2 * s2.adjoint() +
                    (p.omega3 - wl) * s3 * s3.adjoint() +
                    (p.nu - wl) * (a.adjoint() * a + b.adjoint() * b);
  const ComplexMatrix coupling = p.g * (s1 * a + s2 * b + s3 * a + s3 * b);
  h += coupling + coupling.adjoint();
  h += p.omega_drive * (s3 + s3.adjoint());
  return {std::move(h), std::move(layout)};
}

ComplexMatrix dispersive_hamiltonian(double lambda, double omega_drive) {
  const SubsystemLayout& l = three_qubit_layout();
  const ComplexMatrix s1 = pauli(PauliAxis::kPlus, "q1", l);
  const ComplexMatrix s2 = pauli(PauliAxis::kPlus, "q2", l);
  const ComplexMatrix s3 = pauli(PauliAxis::kPlus, "q3", l);
  const ComplexMatrix exchange = s3 * s1.adjoint() + s3 * s2.adjoint();
  return lambda * (exchange + exchange.adjoint()) +
         omega_drive * (s3 + s3.adjoint());
}

std::array<PureState, 4> dark_states() {
  const PureState psi = bell_state(BellKind::kPsiMinus);
  const PureState phi = bell_state(BellKind::kPhiMinus);
  return {psi.tensor(ground_state()), phi.tensor(ground_state()),
          psi.tensor(excited_state()), phi.tensor(excited_state())};
}

LindbladChannel probe_decay(double gamma, const SubsystemLayout& layout) {
  if (!(gamma >= 0.0)) {
    throw ConfigError("spontaneous emission rate gamma must be >= 0");
  }
  return {pauli(PauliAxis::kMinus, "q3", layout), gamma};
}

}  // namespace wqnd
