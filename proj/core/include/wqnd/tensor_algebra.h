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

#ifndef WQND_TENSOR_ALGEBRA_H_
#define WQND_TENSOR_ALGEBRA_H_

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wqnd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Structural checks (hermiticity, unitarity, state validity).
inline constexpr double kStructuralTol = 1e-10;
// Identities that hold exactly up to rounding.
inline constexpr double kExactTol = 1e-12;

struct Factor {
  std::string label;
  int dim = 0;

  bool operator==(const Factor&) const = default;
};

// Ordered tensor-factor structure of a Hilbert space.
//
// Composite indices are big-endian in factor order: the first factor is the
// most significant digit. For qubits local index 0 is |1> (excited, |e>) and
// local index 1 is |0> (ground, |g>), so for qubits (q1, q2, q3) global index
// 0 is |1>|1>|1>.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int size() const { return static_cast<int>(factors_.size()); }
  int total_dim() const;

  bool contains(const std::string& label) const;
  // Position of `label` in factor order; throws NumericError when absent.
  int index_of(const std::string& label) const;
  int dim_of(const std::string& label) const;

  // Layout of `labels` in this layout's order.
  SubsystemLayout subset(std::span<const std::string> labels) const;

  // Mixed-radix digits of a global index, one per factor.
  std::vector<int> digits(int global_index) const;

  bool operator==(const SubsystemLayout&) const = default;

 private:
  std::vector<Factor> factors_;
};

SubsystemLayout qubit_layout(std::initializer_list<std::string> labels);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);

// Full-space operator acting as `op` on `targets` (in the given order; the
// first target is the most significant index of `op`) and as identity on
// every other factor.
ComplexMatrix embed_operator(const ComplexMatrix& op,
                             const SubsystemLayout& layout,
                             std::span<const std::string> targets);
ComplexMatrix embed_operator(const ComplexMatrix& op,
                             const SubsystemLayout& layout,
                             std::initializer_list<std::string> targets);

struct ReducedOperator {
  ComplexMatrix matrix;
  SubsystemLayout layout;
};

// Traces out every factor not listed in `keep`. The result keeps the
// original factor order regardless of the order of `keep`.
ReducedOperator partial_trace(const ComplexMatrix& m,
                              const SubsystemLayout& layout,
                              std::span<const std::string> keep);
ReducedOperator partial_trace(const ComplexMatrix& m,
                              const SubsystemLayout& layout,
                              std::initializer_list<std::string> keep);

// exp(-i h t) for Hermitian h, computed from its eigendecomposition.
ComplexMatrix hermitian_expm(const ComplexMatrix& h, double t);

bool check_hermitian(const ComplexMatrix& a, double tol = kStructuralTol);
bool check_unitary(const ComplexMatrix& a, double tol = kStructuralTol);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entrywise modulus of a - b.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace wqnd

#endif  // WQND_TENSOR_ALGEBRA_H_
