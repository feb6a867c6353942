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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "wqnd/errors.h"

namespace wqnd {

namespace {

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Principal square root of a positive semidefinite matrix, clipping the
// rounding-level negative eigenvalues.
// Eigenvalues at rounding level are zeroed before the square root, which would
// otherwise lift them to ~1e-8.
constexpr double kSqrtCutoff = 1e-13;

Eigen::VectorXd rooted(const Eigen::VectorXd& eigenvalues) {
  return eigenvalues.unaryExpr([](double v) { return v > kSqrtCutoff ? std::sqrt(v) : 0.0; });
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  Eigen::VectorXd w = rooted(es.eigenvalues());
  return es.eigenvectors() * w.cast<Complex>().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout,
                             double psd_slack)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  const int n = layout_.total_dim();
  if (matrix_.rows() != n || matrix_.cols() != n) {
    std::ostringstream os;
    os << "density matrix is " << matrix_.rows() << "x" << matrix_.cols()
       << " but its layout has dimension " << n;
    throw NumericError(os.str());
  }
  if (!matrix_.allFinite()) {
    throw NumericError("density matrix has non-finite entries");
  }
  if (!check_hermitian(matrix_)) {
    throw NumericError("density matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kStructuralTol) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace is " << tr.real() << " (expected 1)";
    throw NumericError(os.str());
  }
  const double lo = min_eigenvalue();
  if (lo < -psd_slack) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << lo;
    throw NumericError(os.str());
  }
}

double DensityMatrix::purity() const {
  return (matrix_ * matrix_).trace().real();
}

double DensityMatrix::min_eigenvalue() const {
  return hermitian_eigenvalues(matrix_).minCoeff();
}

DensityMatrix DensityMatrix::reduce(std::span<const std::string> keep) const {
  ReducedOperator r = partial_trace(matrix_, layout_, keep);
  return DensityMatrix(std::move(r.matrix), std::move(r.layout),
                       kIntegrationPsdSlack);
}

DensityMatrix DensityMatrix::reduce(
    std::initializer_list<std::string> keep) const {
  return reduce(std::span<const std::string>(keep.begin(), keep.size()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<Factor> factors = a.layout().factors();
  for (const Factor& f : b.layout().factors()) factors.push_back(f);
  return DensityMatrix(kron(a.matrix(), b.matrix()),
                       SubsystemLayout(std::move(factors)));
}

PureState::PureState(ComplexVector amplitudes, SubsystemLayout layout)
    : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
  if (amplitudes_.size() != layout_.total_dim()) {
    throw NumericError("pure state size does not match its layout");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kExactTol) {
    throw NumericError("pure state is not normalized");
  }
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint(), layout_);
}

PureState PureState::tensor(const PureState& other) const {
  std::vector<Factor> factors = layout_.factors();
  for (const Factor& f : other.layout().factors()) factors.push_back(f);
  ComplexVector amps(amplitudes_.size() * other.amplitudes().size());
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    amps.segment(i * other.amplitudes().size(), other.amplitudes().size()) =
        amplitudes_(i) * other.amplitudes();
  }
  return PureState(std::move(amps), SubsystemLayout(std::move(factors)));
}

Complex inner_product(const PureState& bra, const PureState& ket) {
  if (bra.layout() != ket.layout()) {
    throw NumericError("inner_product: layout mismatch");
  }
  return bra.amplitudes().dot(ket.amplitudes());
}

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::kPsiMinus:
      return "psi-minus";
    case BellKind::kPsiPlus:
      return "psi-plus";
    case BellKind::kPhiMinus:
      return "phi-minus";
    case BellKind::kPhiPlus:
      return "phi-plus";
  }
  return "unknown";
}

BellKind parse_bell_kind(std::string_view name) {
  for (BellKind k : kAllBellKinds) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown Bell state '" + std::string(name) +
                    "' (expected psi-minus, psi-plus, phi-minus or phi-plus)");
}

const SubsystemLayout& pair_layout() {
  static const SubsystemLayout layout = qubit_layout({"q1", "q2"});
  return layout;
}

const SubsystemLayout& probe_layout() {
  static const SubsystemLayout layout = qubit_layout({"q3"});
  return layout;
}

PureState bell_state(BellKind kind) {
  // Basis order |11>, |10>, |01>, |00>.
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (kind) {
    case BellKind::kPsiMinus:
      v(1) = s;
      v(2) = -s;
      break;
    case BellKind::kPsiPlus:
      v(1) = s;
      v(2) = s;
      break;
    case BellKind::kPhiMinus:
      v(0) = s;
      v(3) = -s;
      break;
    case BellKind::kPhiPlus:
      v(0) = s;
      v(3) = s;
      break;
  }
  return PureState(std::move(v), pair_layout());
}

PureState excited_state() {
  ComplexVector v(2);
  v << 1.0, 0.0;
  return PureState(std::move(v), probe_layout());
}

PureState ground_state() {
  ComplexVector v(2);
  v << 0.0, 1.0;
  return PureState(std::move(v), probe_layout());
}

DensityMatrix werner(double x, BellKind kind) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << "Werner mixing parameter x = " << x << " outside [0, 1]";
    throw ConfigError(os.str());
  }
  const ComplexVector b = bell_state(kind).amplitudes();
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) * ((1.0 - x) / 4.0) +
                    x * (b * b.adjoint());
  return DensityMatrix(std::move(m), pair_layout());
}

double werner_parameter(const DensityMatrix& rho12) {
  if (rho12.dim() != 4) {
    throw NumericError("werner_parameter: expected a two-qubit state");
  }
  double best = 0.0;
  for (BellKind k : kAllBellKinds) {
    const ComplexVector b = bell_state(k).amplitudes();
    best = std::max(best, (b.adjoint() * rho12.matrix() * b)(0, 0).real());
  }
  return (4.0 * best - 1.0) / 3.0;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.layout() != sigma.layout()) {
    throw NumericError("fidelity: layout mismatch");
  }
  const ComplexMatrix sr = psd_sqrt(rho.matrix());
  const ComplexMatrix inner = sr * sigma.matrix() * sr;
  const double root = rooted(hermitian_eigenvalues(inner)).sum();
  return std::min(root * root, 1.0);
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& observable) {
  if (observable.rows() != rho.dim() || observable.cols() != rho.dim()) {
    throw NumericError("expectation: observable dimension mismatch");
  }
  if (!check_hermitian(observable)) {
    throw NumericError("expectation: observable is not Hermitian");
  }
  return (rho.matrix() * observable).trace().real();
}

DensityMatrix bell_relabel(const DensityMatrix& rho,
                           RelabelDirection /*direction*/) {
  if (rho.layout() != pair_layout()) {
    throw NumericError("bell_relabel: expected a state on (q1, q2)");
  }
  ComplexMatrix z(2, 2);
  z << 1.0, 0.0, 0.0, -1.0;
  const ComplexMatrix u = embed_operator(z, pair_layout(), {"q1"});
  return DensityMatrix(u * rho.matrix() * u.adjoint(), rho.layout());
}

double MeasurementRecord::frequency(const std::string& outcome) const {
  auto it = counts.find(outcome);
  if (it == counts.end() || shots == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(shots);
}

MeasurementRecord sample_measurement(const DensityMatrix& rho,
                                     std::string_view basis,
                                     std::int64_t shots, std::uint64_t seed) {
  if (basis != "z") {
    throw ConfigError("sample_measurement: only the z basis is supported");
  }
  if (shots < 1) throw ConfigError("sample_measurement: shots must be >= 1");
  if (rho.dim() != 2) {
    throw NumericError("sample_measurement: expected a single-qubit state");
  }
  double p_excited = rho.population(0);
  if (p_excited < -kStructuralTol || p_excited > 1.0 + kStructuralTol) {
    throw NumericError("sample_measurement: probability outside [0, 1]");
  }
  p_excited = std::clamp(p_excited, 0.0, 1.0);

  std::mt19937_64 rng(seed);
  std::binomial_distribution<std::int64_t> draw(shots, p_excited);
  const std::int64_t n_excited = draw(rng);

  MeasurementRecord rec;
  rec.shots = shots;
  rec.seed = seed;
  rec.counts["e"] = n_excited;
  rec.counts["g"] = shots - n_excited;
  return rec;
}

}  // namespace wqnd
