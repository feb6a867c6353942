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

#ifndef WQND_QUANTUM_STATES_H_
#define WQND_QUANTUM_STATES_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "wqnd/tensor_algebra.h"

namespace wqnd {

// Slack allowed below zero when checking positivity of a density matrix.
inline constexpr double kPsdSlack = 1e-10;
// Looser slack for states produced by numerical integration.
inline constexpr double kIntegrationPsdSlack = 1e-8;

// Density operator on a labelled tensor-product space.
//
// Construction validates hermiticity and unit trace (both within
// kStructuralTol) and positivity up to `psd_slack`; an invalid matrix throws
// NumericError. Instances are immutable.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout,
                double psd_slack = kPsdSlack);

  const ComplexMatrix& matrix() const { return matrix_; }
  const SubsystemLayout& layout() const { return layout_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  double purity() const;
  double min_eigenvalue() const;

  // Reduced state on the kept factors.
  DensityMatrix reduce(std::span<const std::string> keep) const;
  DensityMatrix reduce(std::initializer_list<std::string> keep) const;

  // Population of basis index `i` (diagonal entry, real part).
  double population(int i) const { return matrix_(i, i).real(); }

 private:
  ComplexMatrix matrix_;
  SubsystemLayout layout_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

class PureState {
 public:
  PureState(ComplexVector amplitudes, SubsystemLayout layout);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  const SubsystemLayout& layout() const { return layout_; }

  DensityMatrix projector() const;
  PureState tensor(const PureState& other) const;

 private:
  ComplexVector amplitudes_;
  SubsystemLayout layout_;
};

Complex inner_product(const PureState& bra, const PureState& ket);

enum class BellKind { kPsiMinus, kPsiPlus, kPhiMinus, kPhiPlus };

inline constexpr BellKind kAllBellKinds[] = {
    BellKind::kPsiMinus, BellKind::kPsiPlus, BellKind::kPhiMinus,
    BellKind::kPhiPlus};

std::string_view to_string(BellKind kind);
// Accepts "psi-minus", "psi-plus", "phi-minus", "phi-plus".
BellKind parse_bell_kind(std::string_view name);

// Layout {q1, q2} used for the measured pair.
const SubsystemLayout& pair_layout();
// Layout {q3} used for the probe.
const SubsystemLayout& probe_layout();

// Bell states with |Psi-> = (|10> - |01>)/sqrt2 and |Phi-> = (|11> - |00>)/sqrt2
// in the |1>-first basis.
PureState bell_state(BellKind kind);

// Probe basis states. |e> = |1> is index 0, |g> = |0> is index 1.
PureState excited_state();
PureState ground_state();

// (1 - x)/4 * I + x |B><B| on {q1, q2}; requires 0 <= x <= 1.
DensityMatrix werner(double x, BellKind kind = BellKind::kPsiMinus);

// Mixing parameter of a two-qubit state, (4 F - 1)/3 with F the largest
// Bell-state weight. Exact for every Werner family member.
double werner_parameter(const DensityMatrix& rho12);

// Squared Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// tr(rho * observable); the observable must be Hermitian.
double expectation(const DensityMatrix& rho, const ComplexMatrix& observable);

enum class RelabelDirection { kForward, kInverse };

// Conjugation by sigma_z on q1. Maps Psi+ <-> Psi- and Phi+ <-> Phi- and is
// its own inverse, so both directions apply the same map.
DensityMatrix bell_relabel(const DensityMatrix& rho,
                           RelabelDirection direction = RelabelDirection::kForward);

struct MeasurementRecord {
  std::int64_t shots = 0;
  // Outcome label ("e" or "g") to count.
  std::map<std::string, std::int64_t> counts;
  std::uint64_t seed = 0;

  double frequency(const std::string& outcome) const;
};

// Projective sigma_z measurement of a single-qubit state, sampled with a
// seeded 64-bit Mersenne twister. Only basis "z" is supported.
MeasurementRecord sample_measurement(const DensityMatrix& rho,
                                     std::string_view basis,
                                     std::int64_t shots, std::uint64_t seed);

}  // namespace wqnd

#endif  // WQND_QUANTUM_STATES_H_
