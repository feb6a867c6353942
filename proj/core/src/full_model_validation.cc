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

#include "wqnd/full_model_validation.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wqnd/dynamics.h"
#include "wqnd/errors.h"
#include "wqnd/quantum_states.h"

namespace wqnd {

namespace {

DensityMatrix vacuum(int n_max, const std::string& label) {
  ComplexMatrix m = ComplexMatrix::Zero(n_max + 1, n_max + 1);
  m(0, 0) = 1.0;
  return DensityMatrix(std::move(m), SubsystemLayout({{label, n_max + 1}}));
}

// Probe excited population in the interaction picture of omega X3.
double dressed_excited_population(const DensityMatrix& state, double omega,
                                  double t) {
  const DensityMatrix probe = state.reduce({"q3"});
  const ComplexMatrix back =
      hermitian_expm(omega * pauli_local(PauliAxis::kX), -t);
  return (back * probe.matrix() * back.adjoint())(0, 0).real();
}

std::vector<double> full_model_series(const FullModelParams& p, double x,
                                      const std::vector<double>& times) {
  const FullModel model = full_hamiltonian(p);
  const DensityMatrix rho0 =
      tensor(tensor(tensor(werner(x), ground_state().projector()),
                    vacuum(p.n_max, "A")),
             vacuum(p.n_max, "B"));
  const HermitianPropagator prop(model.hamiltonian);
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    out.push_back(dressed_excited_population(prop.evolve(rho0, t),
                                             p.omega_drive, t));
  }
  return out;
}

}  // namespace

void FullModelValidationConfig::validate() const {
  params.validate();
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ConfigError("full model: x must lie in [0, 1]");
  }
  if (samples < 2) throw ConfigError("full model: samples must be >= 2");
  if (window && !(*window > 0.0)) {
    throw ConfigError("full model: window must be > 0");
  }
}

FullModelValidationReport validate_full_model(
    const FullModelValidationConfig& cfg) {
  cfg.validate();
  const FullModelParams& p = cfg.params;

  FullModelValidationReport r;
  r.lambda = p.lambda();
  r.window = cfg.window.value_or(r.lambda > 0.0 ? std::numbers::pi / r.lambda
                                                : 10.0);
  if (!large_detuning_regime(p.g, p.delta)) {
    std::ostringstream os;
    os << "delta = " << p.delta << " is below 10 g = " << 10.0 * p.g
       << "; cavity elimination is not reliable";
    r.warnings.push_back(os.str());
  }
  if (r.lambda > 0.0 && p.omega_drive < 10.0 * r.lambda) {
    std::ostringstream os;
    os << "drive Omega = " << p.omega_drive << " is below 10 lambda = "
       << 10.0 * r.lambda << "; strong-driving reduction is not reliable";
    r.warnings.push_back(os.str());
  }

  for (int i = 0; i < cfg.samples; ++i) {
    r.times.push_back(r.window * i / (cfg.samples - 1));
  }
  r.excited_full = full_model_series(p, cfg.x, r.times);

  FullModelParams finer = p;
  finer.n_max = p.n_max + 1;
  const std::vector<double> check = full_model_series(finer, cfg.x, r.times);
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    r.cutoff_difference =
        std::max(r.cutoff_difference, std::abs(check[i] - r.excited_full[i]));
  }
  if (r.cutoff_difference > cfg.cutoff_tol) {
    std::ostringstream os;
    os << "Fock cutoff not converged: n_max = " << p.n_max << " and "
       << finer.n_max << " differ by " << r.cutoff_difference;
    throw ConvergenceError(os.str());
  }

  const DensityMatrix rho0 = tensor(werner(cfg.x), ground_state().projector());
  const HermitianPropagator eff(h_eff({r.lambda, r.lambda, r.lambda}));
  const HermitianPropagator disp(dispersive_hamiltonian(r.lambda, p.omega_drive));
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    const double t = r.times[i];
    r.excited_effective.push_back(eff.evolve(rho0, t).reduce({"q3"}).population(0));
    r.excited_dispersive.push_back(
        dressed_excited_population(disp.evolve(rho0, t), p.omega_drive, t));
    r.max_deviation = std::max(
        r.max_deviation, std::abs(r.excited_full[i] - r.excited_effective[i]));
    r.max_deviation_dispersive =
        std::max(r.max_deviation_dispersive,
                 std::abs(r.excited_dispersive[i] - r.excited_effective[i]));
  }
  r.passed = r.max_deviation <= cfg.max_deviation;
  return r;
}

}  // namespace wqnd
