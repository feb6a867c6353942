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

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "wqnd/errors.h"

namespace wqnd {

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const Factor& f : factors_) {
    if (f.dim < 1) {
      throw NumericError("layout factor '" + f.label +
                         "' must have dimension >= 1");
    }
    if (!seen.insert(f.label).second) {
      throw NumericError("duplicate layout label '" + f.label + "'");
    }
  }
}

int SubsystemLayout::total_dim() const {
  int d = 1;
  for (const Factor& f : factors_) d *= f.dim;
  return d;
}

bool SubsystemLayout::contains(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

int SubsystemLayout::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (factors_[i].label == label) return i;
  }
  throw NumericError("unknown subsystem label '" + label + "'");
}

int SubsystemLayout::dim_of(const std::string& label) const {
  return factors_[index_of(label)].dim;
}

SubsystemLayout SubsystemLayout::subset(
    std::span<const std::string> labels) const {
  std::vector<Factor> kept;
  for (const Factor& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) != labels.end()) {
      kept.push_back(f);
    }
  }
  return SubsystemLayout(std::move(kept));
}

std::vector<int> SubsystemLayout::digits(int global_index) const {
  std::vector<int> out(factors_.size());
  for (int i = size() - 1; i >= 0; --i) {
    out[i] = global_index % factors_[i].dim;
    global_index /= factors_[i].dim;
  }
  return out;
}

SubsystemLayout qubit_layout(std::initializer_list<std::string> labels) {
  std::vector<Factor> factors;
  for (const std::string& l : labels) factors.push_back({l, 2});
  return SubsystemLayout(std::move(factors));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

namespace {

void check_square(const ComplexMatrix& m, int dim, const char* what) {
  if (m.rows() != dim || m.cols() != dim) {
    std::ostringstream os;
    os << what << ": expected " << dim << "x" << dim << " matrix, got "
       << m.rows() << "x" << m.cols();
    throw NumericError(os.str());
  }
}

// Positions of `labels` in the layout, rejecting unknown or repeated labels.
std::vector<int> resolve_targets(const SubsystemLayout& layout,
                                 std::span<const std::string> labels) {
  std::vector<int> pos;
  pos.reserve(labels.size());
  for (const std::string& l : labels) {
    int p = layout.index_of(l);
    if (std::find(pos.begin(), pos.end(), p) != pos.end()) {
      throw NumericError("duplicate target label '" + l + "'");
    }
    pos.push_back(p);
  }
  return pos;
}

}  // namespace

ComplexMatrix embed_operator(const ComplexMatrix& op,
                             const SubsystemLayout& layout,
                             std::span<const std::string> targets) {
  if (targets.empty()) throw NumericError("embed_operator: no targets");
  const std::vector<int> pos = resolve_targets(layout, targets);
  int op_dim = 1;
  for (int p : pos) op_dim *= layout.factors()[p].dim;
  check_square(op, op_dim, "embed_operator");

  const int n = layout.total_dim();
  const int nf = layout.size();
  std::vector<bool> is_target(nf, false);
  for (int p : pos) is_target[p] = true;

  std::vector<std::vector<int>> digits(n);
  std::vector<int> sub_index(n, 0);
  for (int i = 0; i < n; ++i) {
    digits[i] = layout.digits(i);
    int s = 0;
    for (int p : pos) s = s * layout.factors()[p].dim + digits[i][p];
    sub_index[i] = s;
  }

  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool spectators_match = true;
      for (int f = 0; f < nf && spectators_match; ++f) {
        if (!is_target[f] && digits[i][f] != digits[j][f]) {
          spectators_match = false;
        }
      }
      if (spectators_match) out(i, j) = op(sub_index[i], sub_index[j]);
    }
  }
  return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op,
                             const SubsystemLayout& layout,
                             std::initializer_list<std::string> targets) {
  return embed_operator(op, layout,
                        std::span<const std::string>(targets.begin(),
                                                     targets.size()));
}

ReducedOperator partial_trace(const ComplexMatrix& m,
                              const SubsystemLayout& layout,
                              std::span<const std::string> keep) {
  if (keep.empty()) throw NumericError("partial_trace: empty keep set");
  resolve_targets(layout, keep);
  check_square(m, layout.total_dim(), "partial_trace");

  SubsystemLayout kept = layout.subset(keep);
  const int nf = layout.size();
  std::vector<bool> is_kept(nf, false);
  for (const std::string& l : keep) is_kept[layout.index_of(l)] = true;

  // Split each global index into (kept index, traced index).
  const int n = layout.total_dim();
  std::vector<int> kept_index(n), traced_index(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> d = layout.digits(i);
    int k = 0, t = 0;
    for (int f = 0; f < nf; ++f) {
      const int dim = layout.factors()[f].dim;
      if (is_kept[f]) {
        k = k * dim + d[f];
      } else {
        t = t * dim + d[f];
      }
    }
    kept_index[i] = k;
    traced_index[i] = t;
  }

  const int nk = kept.total_dim();
  ComplexMatrix out = ComplexMatrix::Zero(nk, nk);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (traced_index[i] == traced_index[j]) {
        out(kept_index[i], kept_index[j]) += m(i, j);
      }
    }
  }
  return {std::move(out), std::move(kept)};
}

ReducedOperator partial_trace(const ComplexMatrix& m,
                              const SubsystemLayout& layout,
                              std::initializer_list<std::string> keep) {
  return partial_trace(
      m, layout, std::span<const std::string>(keep.begin(), keep.size()));
}

ComplexMatrix hermitian_expm(const ComplexMatrix& h, double t) {
  if (h.rows() != h.cols()) throw NumericError("hermitian_expm: non-square");
  if (!check_hermitian(h)) {
    throw NumericError("hermitian_expm: generator is not Hermitian");
  }
  // Symmetrize so the solver sees an exactly self-adjoint input.
  const ComplexMatrix hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hs);
  if (es.info() != Eigen::Success) {
    throw NumericError("hermitian_expm: eigendecomposition failed");
  }
  const Eigen::VectorXd& w = es.eigenvalues();
  ComplexVector phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -w(k) * t));
  }
  const ComplexMatrix& v = es.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

bool check_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_difference(a, a.adjoint()) <= tol;
}

bool check_unitary(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_difference(a * a.adjoint(),
                            ComplexMatrix::Identity(a.rows(), a.cols())) <=
         tol;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw NumericError("frobenius_distance: dimension mismatch");
  }
  return (a - b).norm();
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw NumericError("max_abs_difference: dimension mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace wqnd
