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

#ifndef WQND_DYNAMICS_H_
#define WQND_DYNAMICS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wqnd/model_operators.h"
#include "wqnd/quantum_states.h"
#include "wqnd/tensor_algebra.h"

namespace wqnd {

// Fixed-step RK4 settings. Times are in units of 1/g.
struct IntegratorConfig {
  double dt = 1e-3;
  double t_end = 0.0;
  int record_every = 1;      // steps between recorded states
  double trace_tol = 1e-8;   // allowed |tr(rho) - 1| at recorded states
  double steady_eps = 1e-8;  // generator-norm threshold for steady state

  void validate() const;
};

struct NamedObservable {
  std::string name;
  ComplexMatrix op;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::map<std::string, std::vector<double>> observables;

  std::size_t size() const { return times.size(); }
};

// Wraps an integrated matrix as a state after checking finiteness and
// |tr - 1| <= trace_tol; the result is symmetrized and renormalized.
DensityMatrix checked_state(const ComplexMatrix& m,
                            const SubsystemLayout& layout, double trace_tol,
                            double t);

// u rho u'. Requires u unitary.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u);

// Closed-system evolution exp(-i h t) rho exp(i h t).
DensityMatrix propagate(const ComplexMatrix& h, const DensityMatrix& rho0,
                        double t);

// Caches the eigendecomposition of a Hermitian generator so exp(-i h t) can
// be evaluated at many times for the cost of two matrix products each.
class HermitianPropagator {
 public:
  explicit HermitianPropagator(const ComplexMatrix& h);

  ComplexMatrix unitary(double t) const;
  DensityMatrix evolve(const DensityMatrix& rho0, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  ComplexMatrix eigenvectors_;
};

// Right-hand side of the master equation
//   d rho/dt = -i[h, rho] + sum_k rate_k (2 L rho L' - L'L rho - rho L'L).
class MasterEquation {
 public:
  MasterEquation(ComplexMatrix h, std::vector<LindbladChannel> channels);

  int dim() const { return static_cast<int>(h_.rows()); }
  const ComplexMatrix& hamiltonian() const { return h_; }
  const std::vector<LindbladChannel>& channels() const { return channels_; }

  void rhs(const ComplexMatrix& rho, ComplexMatrix& out) const;
  ComplexMatrix rhs(const ComplexMatrix& rho) const;

  // One classic fourth-order Runge-Kutta step of size h, in place.
  void rk4_step(ComplexMatrix& rho, double h);

  // Advances by `duration` using ceil(duration / dt) equal steps.
  void advance(ComplexMatrix& rho, double duration, double dt);

 private:
  ComplexMatrix h_;
  std::vector<LindbladChannel> channels_;
  // h - i sum_k rate_k L'L
  ComplexMatrix h_nonhermitian_;
  ComplexMatrix k1_, k2_, k3_, k4_, tmp_, work_;
};

ComplexMatrix lindblad_rhs(const ComplexMatrix& h,
                           const std::vector<LindbladChannel>& channels,
                           const DensityMatrix& rho);

// Integrates from t = 0 to cfg.t_end, recording every cfg.record_every steps
// plus the final state. Each recorded state is checked for trace drift and
// finiteness and then validated as a DensityMatrix.
Trajectory integrate_master(const ComplexMatrix& h,
                            const std::vector<LindbladChannel>& channels,
                            const DensityMatrix& rho0,
                            const IntegratorConfig& cfg,
                            const std::vector<NamedObservable>& observables = {});

struct SteadyStateResult {
  DensityMatrix state;
  bool reached = false;
  double t_reached = 0.0;
  double generator_norm = 0.0;
};

// Integrates until the Frobenius norm of the generator drops to
// cfg.steady_eps or cfg.t_end is hit; `reached` says which.
// When `record` is given, the states visited every cfg.record_every steps
// (and the last one) are appended to it.
SteadyStateResult steady_state(const ComplexMatrix& h,
                               const std::vector<LindbladChannel>& channels,
                               const DensityMatrix& rho0,
                               const IntegratorConfig& cfg,
                               Trajectory* record = nullptr,
                               const std::vector<NamedObservable>& observables = {});

// dim^2 x dim^2 superoperator acting on column-stacked vec(rho).
ComplexMatrix liouvillian(const ComplexMatrix& h,
                          const std::vector<LindbladChannel>& channels);

// Basis of the superoperator's kernel, reshaped to dim x dim matrices.
std::vector<ComplexMatrix> liouvillian_kernel(
    const ComplexMatrix& h, const std::vector<LindbladChannel>& channels,
    double tol = 1e-9);

}  // namespace wqnd

#endif  // WQND_DYNAMICS_H_
