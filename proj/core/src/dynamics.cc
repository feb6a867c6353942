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

#include "wqnd/dynamics.h"

#include <cmath>
#include <sstream>

#include "wqnd/errors.h"

namespace wqnd {

namespace {

const Complex kI(0.0, 1.0);

int step_count(double duration, double dt) {
  if (duration <= 0.0) return 0;
  return static_cast<int>(std::ceil(duration / dt - 1e-9));
}

}  // namespace

DensityMatrix checked_state(const ComplexMatrix& m,
                            const SubsystemLayout& layout, double trace_tol,
                            double t) {
  if (!m.allFinite()) {
    std::ostringstream os;
    os << "integration produced non-finite values at t = " << t;
    throw NumericError(os.str());
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > trace_tol) {
    std::ostringstream os;
    os << "trace drift " << std::abs(tr - 1.0) << " at t = " << t
       << " exceeds tolerance " << trace_tol << "; reduce dt";
    throw NumericError(os.str());
  }
  ComplexMatrix sym = 0.5 * (m + m.adjoint()) / tr;
  return DensityMatrix(std::move(sym), layout, kIntegrationPsdSlack);
}

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("integrator: dt must be > 0");
  if (!(t_end >= 0.0)) throw ConfigError("integrator: t_end must be >= 0");
  if (record_every < 1) {
    throw ConfigError("integrator: record_every must be >= 1");
  }
  if (!(trace_tol > 0.0) || !(steady_eps > 0.0)) {
    throw ConfigError("integrator: tolerances must be > 0");
  }
}

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw NumericError("conjugate: dimension mismatch");
  }
  if (!check_unitary(u)) throw NumericError("conjugate: operator is not unitary");
  ComplexMatrix m = u * rho.matrix() * u.adjoint();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), rho.layout());
}

DensityMatrix propagate(const ComplexMatrix& h, const DensityMatrix& rho0,
                        double t) {
  if (h.rows() != rho0.dim()) throw NumericError("propagate: dimension mismatch");
  return conjugate(rho0, hermitian_expm(h, t));
}

HermitianPropagator::HermitianPropagator(const ComplexMatrix& h) {
  if (!check_hermitian(h)) {
    throw NumericError("propagator: generator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) {
    throw NumericError("propagator: eigendecomposition failed");
  }
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
}

ComplexMatrix HermitianPropagator::unitary(double t) const {
  ComplexVector phases(eigenvalues_.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -eigenvalues_(k) * t));
  }
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

DensityMatrix HermitianPropagator::evolve(const DensityMatrix& rho0,
                                          double t) const {
  return conjugate(rho0, unitary(t));
}

MasterEquation::MasterEquation(ComplexMatrix h,
                               std::vector<LindbladChannel> channels)
    : h_(std::move(h)), channels_(std::move(channels)) {
  if (h_.rows() != h_.cols()) throw NumericError("master equation: non-square H");
  if (!check_hermitian(h_)) {
    throw NumericError("master equation: Hamiltonian is not Hermitian");
  }
  h_nonhermitian_ = h_;
  for (const LindbladChannel& c : channels_) {
    if (c.collapse.rows() != h_.rows() || c.collapse.cols() != h_.cols()) {
      throw NumericError("master equation: collapse operator dimension mismatch");
    }
    if (!(c.rate >= 0.0)) throw ConfigError("master equation: negative rate");
    h_nonhermitian_ -= kI * c.rate * (c.collapse.adjoint() * c.collapse);
  }
  const Eigen::Index n = h_.rows();
  for (ComplexMatrix* m : {&k1_, &k2_, &k3_, &k4_, &tmp_, &work_}) {
    m->resize(n, n);
  }
}

void MasterEquation::rhs(const ComplexMatrix& rho, ComplexMatrix& out) const {
  // -i (Hn rho - rho Hn') + sum 2 rate L rho L'
  out.noalias() = -kI * (h_nonhermitian_ * rho);
  out.noalias() += kI * (rho * h_nonhermitian_.adjoint());
  for (const LindbladChannel& c : channels_) {
    if (c.rate == 0.0) continue;
    out.noalias() += (2.0 * c.rate) * (c.collapse * rho * c.collapse.adjoint());
  }
}

ComplexMatrix MasterEquation::rhs(const ComplexMatrix& rho) const {
  ComplexMatrix out(rho.rows(), rho.cols());
  rhs(rho, out);
  return out;
}

void MasterEquation::rk4_step(ComplexMatrix& rho, double h) {
  rhs(rho, k1_);
  tmp_ = rho + (0.5 * h) * k1_;
  rhs(tmp_, k2_);
  tmp_ = rho + (0.5 * h) * k2_;
  rhs(tmp_, k3_);
  tmp_ = rho + h * k3_;
  rhs(tmp_, k4_);
  rho += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
}

void MasterEquation::advance(ComplexMatrix& rho, double duration, double dt) {
  const int n = step_count(duration, dt);
  if (n == 0) return;
  const double h = duration / n;
  for (int i = 0; i < n; ++i) rk4_step(rho, h);
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& h,
                           const std::vector<LindbladChannel>& channels,
                           const DensityMatrix& rho) {
  if (h.rows() != rho.dim()) throw NumericError("lindblad_rhs: dimension mismatch");
  return MasterEquation(h, channels).rhs(rho.matrix());
}

Trajectory integrate_master(const ComplexMatrix& h,
                            const std::vector<LindbladChannel>& channels,
                            const DensityMatrix& rho0,
                            const IntegratorConfig& cfg,
                            const std::vector<NamedObservable>& observables) {
  cfg.validate();
  if (h.rows() != rho0.dim()) {
    throw NumericError("integrate_master: dimension mismatch");
  }
  for (const NamedObservable& o : observables) {
    if (o.op.rows() != rho0.dim() || !check_hermitian(o.op)) {
      throw NumericError("integrate_master: observable '" + o.name +
                         "' is not a Hermitian operator on the state space");
    }
  }
  MasterEquation eq(h, channels);
  const int n = step_count(cfg.t_end, cfg.dt);
  const double step = n > 0 ? cfg.t_end / n : 0.0;

  Trajectory traj;
  auto record = [&](const ComplexMatrix& m, double t) {
    DensityMatrix s = checked_state(m, rho0.layout(), cfg.trace_tol, t);
    for (const NamedObservable& o : observables) {
      traj.observables[o.name].push_back(expectation(s, o.op));
    }
    traj.times.push_back(t);
    traj.states.push_back(std::move(s));
  };

  ComplexMatrix rho = rho0.matrix();
  record(rho, 0.0);
  for (int i = 1; i <= n; ++i) {
    eq.rk4_step(rho, step);
    if (i % cfg.record_every == 0 || i == n) record(rho, i * step);
  }
  return traj;
}

SteadyStateResult steady_state(const ComplexMatrix& h,
                               const std::vector<LindbladChannel>& channels,
                               const DensityMatrix& rho0,
                               const IntegratorConfig& cfg, Trajectory* record,
                               const std::vector<NamedObservable>& observables) {
  cfg.validate();
  MasterEquation eq(h, channels);
  auto keep = [&](const ComplexMatrix& m, double t) {
    if (record == nullptr) return;
    DensityMatrix s = checked_state(m, rho0.layout(), cfg.trace_tol, t);
    for (const NamedObservable& o : observables) {
      record->observables[o.name].push_back(expectation(s, o.op));
    }
    record->times.push_back(t);
    record->states.push_back(std::move(s));
  };
  // Generator norm is sampled every `check_every` steps.
  constexpr int kCheckEvery = 100;
  const int n = step_count(cfg.t_end, cfg.dt);
  const double step = n > 0 ? cfg.t_end / n : 0.0;

  ComplexMatrix rho = rho0.matrix();
  keep(rho, 0.0);
  double norm = eq.rhs(rho).norm();
  int i = 0;
  int last_kept = 0;
  while (norm > cfg.steady_eps && i < n) {
    const int chunk = std::min(kCheckEvery, n - i);
    for (int k = 0; k < chunk; ++k) {
      eq.rk4_step(rho, step);
      ++i;
      if (i % cfg.record_every == 0) {
        keep(rho, i * step);
        last_kept = i;
      }
    }
    norm = eq.rhs(rho).norm();
    if (!std::isfinite(norm)) {
      throw NumericError("steady_state: integration diverged; reduce dt");
    }
  }
  const double t = i * step;
  if (last_kept != i) keep(rho, t);
  return {checked_state(rho, rho0.layout(), cfg.trace_tol, t),
          norm <= cfg.steady_eps, t, norm};
}

ComplexMatrix liouvillian(const ComplexMatrix& h,
                          const std::vector<LindbladChannel>& channels) {
  const Eigen::Index n = h.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  // vec(A X B) = (B^T (x) A) vec(X) for column-stacked vec.
  ComplexMatrix sup = -kI * (kron(id, h) - kron(h.transpose(), id));
  for (const LindbladChannel& c : channels) {
    const ComplexMatrix& l = c.collapse;
    const ComplexMatrix ldl = l.adjoint() * l;
    sup += c.rate * (2.0 * kron(l.conjugate(), l) - kron(id, ldl) -
                     kron(ldl.transpose(), id));
  }
  return sup;
}

std::vector<ComplexMatrix> liouvillian_kernel(
    const ComplexMatrix& h, const std::vector<LindbladChannel>& channels,
    double tol) {
  const ComplexMatrix sup = liouvillian(h, channels);
  Eigen::JacobiSVD<ComplexMatrix> svd(sup, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const Eigen::Index n = h.rows();
  std::vector<ComplexMatrix> basis;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) <= tol) {
      ComplexVector v = svd.matrixV().col(k);
      basis.push_back(Eigen::Map<ComplexMatrix>(v.data(), n, n));
    }
  }
  return basis;
}

}  // namespace wqnd
