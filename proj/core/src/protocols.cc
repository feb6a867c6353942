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

#include "wqnd/protocols.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "parallel.h"
#include "wqnd/errors.h"
#include "wqnd/model_operators.h"

namespace wqnd {

namespace {

constexpr double kPi = std::numbers::pi;

double sin2(double angle) {
  const double s = std::sin(angle);
  return s * s;
}

void require_informative(double lambda_t) {
  if (sin2(lambda_t) < kMinInformativeSin2) {
    std::ostringstream os;
    os << "non-informative interaction time: sin^2(lambda t) = "
       << sin2(lambda_t) << " < " << kMinInformativeSin2
       << " (the probe is back in its initial state)";
    throw NumericError(os.str());
  }
}

void require_pair_state(const DensityMatrix& rho12) {
  if (rho12.layout() != pair_layout()) {
    throw NumericError("protocol input must be a state on (q1, q2)");
  }
}

DensityMatrix with_ground_probe(const DensityMatrix& rho12) {
  return tensor(rho12, ground_state().projector());
}

NamedObservable probe_sigma_z() {
  return {"sigma3z", pauli(PauliAxis::kZ, "q3", three_qubit_layout())};
}

ProtocolReport make_report(const DensityMatrix& rho12,
                           const DensityMatrix& final_state, double lambda_t,
                           std::optional<std::int64_t> shots,
                           std::uint64_t seed, std::optional<Trajectory> traj,
                           std::string echo) {
  DensityMatrix probe = final_state.reduce({"q3"});
  DensityMatrix after = final_state.reduce({"q1", "q2"});
  Estimate est =
      estimate_x_from_probe(probe, TrajectoryReadout{lambda_t}, shots, seed);
  const double x_true = werner_parameter(rho12);
  const double f = fidelity(after, rho12);
  return ProtocolReport{x_true,
                        est.x_hat,
                        std::abs(x_true - est.x_hat),
                        f,
                        std::move(probe),
                        std::move(after),
                        est,
                        std::move(traj),
                        std::move(echo)};
}

// Appends `b` to `a`, shifting its times by `offset` and dropping its first
// sample (the shared boundary state).
void append_trajectory(Trajectory& a, Trajectory&& b, double offset) {
  for (std::size_t i = 1; i < b.size(); ++i) {
    a.times.push_back(b.times[i] + offset);
    a.states.push_back(std::move(b.states[i]));
  }
  for (auto& [name, series] : b.observables) {
    auto& dst = a.observables[name];
    dst.insert(dst.end(), series.begin() + 1, series.end());
  }
}

}  // namespace

double JointConfig::interaction_time() const {
  return t.value_or(kPi / (2.0 * lambda));
}

void JointConfig::validate() const {
  if (!(lambda > 0.0)) throw ConfigError("joint: lambda must be > 0");
  if (t && !(*t > 0.0)) throw ConfigError("joint: t must be > 0");
  if (!(gamma >= 0.0)) throw ConfigError("joint: gamma must be >= 0");
  if (shots && *shots < 1) throw ConfigError("joint: shots must be >= 1");
  if (gamma > 0.0) {
    IntegratorConfig probe = integrator;
    probe.t_end = interaction_time();
    probe.validate();
  }
}

double SequentialConfig::matched_t2(double lambda1, double lambda2, double t1,
                                    int n) {
  return (lambda1 / lambda2) * t1 + 2.0 * n * kPi / lambda2;
}

SequentialConfig SequentialConfig::gate_times(double lambda1, double lambda2) {
  SequentialConfig c;
  c.lambda1 = lambda1;
  c.lambda2 = lambda2;
  c.t1 = kPi / (2.0 * lambda1);
  c.t2 = matched_t2(lambda1, lambda2, c.t1, 0);
  return c;
}

void SequentialConfig::validate() const {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0)) {
    throw ConfigError("sequential: lambda1 and lambda2 must be > 0");
  }
  if (!(t1 > 0.0) || !(t2 > 0.0)) {
    throw ConfigError("sequential: t1 and t2 must be > 0");
  }
  if (n < 0) throw ConfigError("sequential: n must be >= 0");
  if (!(gamma >= 0.0)) throw ConfigError("sequential: gamma must be >= 0");
  if (shots && *shots < 1) throw ConfigError("sequential: shots must be >= 1");
  const double want = matched_t2(lambda1, lambda2, t1, n);
  if (std::abs(t2 - want) > 1e-9) {
    std::ostringstream os;
    os.precision(12);
    os << "sequential: timing constraint t2 = (lambda1/lambda2) t1 + 2 n pi "
          "/ lambda2 violated: t2 = "
       << t2 << " but n = " << n << " requires t2 = " << want;
    throw NumericError(os.str());
  }
  if (gamma > 0.0) integrator.validate();
}

double CalibrationCurve::invert(double sigma_z) const {
  if (std::abs(slope) < 1e-12) {
    throw NumericError("calibration curve is flat; cannot invert");
  }
  return (sigma_z - intercept) / slope;
}

Estimate estimate_x_from_probe(const DensityMatrix& probe,
                               const Readout& readout,
                               std::optional<std::int64_t> shots,
                               std::uint64_t seed) {
  if (probe.dim() != 2) {
    throw NumericError("estimate_x_from_probe: expected a single-qubit probe");
  }
  double p_excited = probe.population(0);
  std::optional<double> binomial_sd;
  if (shots) {
    const MeasurementRecord rec = sample_measurement(probe, "z", *shots, seed);
    p_excited = rec.frequency("e");
    binomial_sd =
        std::sqrt(p_excited * (1.0 - p_excited) / static_cast<double>(*shots));
  }

  Estimate est;
  if (const auto* tr = std::get_if<TrajectoryReadout>(&readout)) {
    require_informative(tr->lambda_t);
    const double s2 = sin2(tr->lambda_t);
    est.raw = 1.0 - 2.0 * p_excited / s2;
    if (binomial_sd) est.standard_error = 2.0 * *binomial_sd / s2;
  } else {
    const auto& steady = std::get<SteadyReadout>(readout);
    if (!steady.curve) {
      throw ConfigError("steady-state readout requires a calibration curve");
    }
    est.raw = steady.curve->invert(2.0 * p_excited - 1.0);
    if (binomial_sd) {
      est.standard_error = 2.0 * *binomial_sd / std::abs(steady.curve->slope);
    }
  }
  est.x_hat = std::clamp(est.raw, 0.0, 1.0);
  est.clamped = est.x_hat != est.raw;
  return est;
}

double estimate_x_steady(const CalibrationCurve& curve, double sigma_z) {
  return std::clamp(curve.invert(sigma_z), 0.0, 1.0);
}

ProtocolReport run_joint(const DensityMatrix& rho12, const JointConfig& cfg) {
  cfg.validate();
  require_pair_state(rho12);
  const double t = cfg.interaction_time();
  const double lambda_t = cfg.lambda * t;
  require_informative(lambda_t);

  const DensityMatrix rho0 = with_ground_probe(rho12);
  const ComplexMatrix h = h_eff({cfg.lambda, cfg.lambda, cfg.lambda});

  std::ostringstream echo;
  echo.precision(12);
  echo << "protocol = joint\nlambda = " << cfg.lambda << "\nt = " << t
       << "\ngamma = " << cfg.gamma << "\n";

  std::optional<Trajectory> traj;
  std::optional<DensityMatrix> final_state;
  if (cfg.gamma == 0.0) {
    const double gate_time = kPi / (2.0 * cfg.lambda);
    if (std::abs(t - gate_time) <= 1e-12 * std::max(1.0, gate_time)) {
      final_state = conjugate(rho0, qnd_unitary());
    } else {
      final_state = propagate(h, rho0, t);
    }
  } else {
    IntegratorConfig icfg = cfg.integrator;
    icfg.t_end = t;
    traj = integrate_master(h, {probe_decay(cfg.gamma)}, rho0, icfg,
                            {probe_sigma_z()});
    final_state = traj->states.back();
  }
  return make_report(rho12, *final_state, lambda_t, cfg.shots, cfg.seed,
                     std::move(traj), echo.str());
}

ProtocolReport run_joint_relabeled(const DensityMatrix& rho12,
                                   const JointConfig& cfg) {
  require_pair_state(rho12);
  const DensityMatrix relabeled =
      bell_relabel(rho12, RelabelDirection::kForward);
  ProtocolReport r = run_joint(relabeled, cfg);
  DensityMatrix restored =
      bell_relabel(r.state_12_after, RelabelDirection::kInverse);
  r.fidelity_12 = fidelity(restored, rho12);
  r.state_12_after = std::move(restored);
  r.config_echo += "relabel = on\n";
  return r;
}

ProtocolReport run_sequential(const DensityMatrix& rho12,
                              const SequentialConfig& cfg) {
  cfg.validate();
  require_pair_state(rho12);
  const double lambda_t = cfg.lambda1 * cfg.t1;
  require_informative(lambda_t);

  const EffectiveParams p{cfg.lambda1, cfg.lambda1, cfg.lambda2};
  const ComplexMatrix h1 = h_pair(p, 1);
  const ComplexMatrix h2 = h_pair(p, 2);
  const DensityMatrix rho0 = with_ground_probe(rho12);

  std::ostringstream echo;
  echo.precision(12);
  echo << "protocol = sequential\nlambda1 = " << cfg.lambda1
       << "\nlambda2 = " << cfg.lambda2 << "\nt1 = " << cfg.t1
       << "\nt2 = " << cfg.t2 << "\nn = " << cfg.n << "\ngamma = " << cfg.gamma
       << "\n";

  if (cfg.gamma == 0.0) {
    const DensityMatrix mid = propagate(h1, rho0, cfg.t1);
    const DensityMatrix end = propagate(h2, mid, cfg.t2);
    return make_report(rho12, end, lambda_t, cfg.shots, cfg.seed,
                       std::nullopt, echo.str());
  }

  const std::vector<LindbladChannel> decay = {probe_decay(cfg.gamma)};
  IntegratorConfig icfg = cfg.integrator;
  icfg.t_end = cfg.t1;
  Trajectory traj = integrate_master(h1, decay, rho0, icfg, {probe_sigma_z()});
  icfg.t_end = cfg.t2;
  Trajectory second =
      integrate_master(h2, decay, traj.states.back(), icfg, {probe_sigma_z()});
  append_trajectory(traj, std::move(second), cfg.t1);
  DensityMatrix end = traj.states.back();
  return make_report(rho12, end, lambda_t, cfg.shots, cfg.seed,
                     std::move(traj), echo.str());
}

CalibrationResult run_dissipative_calibration(double gamma,
                                              const std::vector<double>& x_grid,
                                              const IntegratorConfig& cfg,
                                              double lambda, int threads) {
  if (!(gamma > 0.0)) throw ConfigError("calibration: gamma must be > 0");
  if (!(lambda > 0.0)) throw ConfigError("calibration: lambda must be > 0");
  if (x_grid.size() < 2) {
    throw ConfigError("calibration: need at least two x values");
  }
  cfg.validate();

  // Record at most one state per unit time.
  IntegratorConfig icfg = cfg;
  icfg.record_every = std::max(
      cfg.record_every, static_cast<int>(std::lround(1.0 / cfg.dt)));

  const ComplexMatrix h = h_eff({lambda, lambda, lambda});
  const std::vector<LindbladChannel> decay = {probe_decay(gamma)};
  const NamedObservable sz = probe_sigma_z();

  // Endpoints are appended when the grid does not already contain them.
  std::vector<double> xs = x_grid;
  for (double e : {0.0, 1.0}) {
    if (std::find(xs.begin(), xs.end(), e) == xs.end()) xs.push_back(e);
  }

  const int n = static_cast<int>(xs.size());
  std::vector<double> values(n), t_reached(n);
  std::vector<std::optional<Trajectory>> trajs(n);
  internal::parallel_for(n, threads, [&](int i) {
    const DensityMatrix rho0 = with_ground_probe(werner(xs[i]));
    Trajectory tr;
    SteadyStateResult ss = steady_state(h, decay, rho0, icfg, &tr, {sz});
    if (!ss.reached) {
      std::ostringstream os;
      os << "calibration: steady state not reached for x = " << xs[i]
         << " by t = " << cfg.t_end << " (generator norm "
         << ss.generator_norm << ")";
      throw ConvergenceError(os.str());
    }
    values[i] = expectation(ss.state, sz.op);
    t_reached[i] = ss.t_reached;
    trajs[i] = std::move(tr);
  });

  CalibrationResult out;
  const std::size_t m = x_grid.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += xs[i];
    sy += values[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * values[i];
  }
  const double denom = m * sxx - sx * sx;
  if (std::abs(denom) < 1e-15) {
    throw ConfigError("calibration: x grid must contain distinct values");
  }
  out.fitted.slope = (m * sxy - sx * sy) / denom;
  out.fitted.intercept = (sy - out.fitted.slope * sx) / m;
  out.fitted.gamma = gamma;
  out.fitted.provenance = CurveProvenance::kFitted;

  auto value_at = [&](double x) {
    return values[std::find(xs.begin(), xs.end(), x) - xs.begin()];
  };
  out.endpoints.intercept = value_at(0.0);
  out.endpoints.slope = value_at(1.0) - value_at(0.0);
  out.endpoints.gamma = gamma;
  out.endpoints.provenance = CurveProvenance::kAnalyticEndpoints;

  for (std::size_t i = 0; i < m; ++i) {
    out.x.push_back(xs[i]);
    out.steady_sigma_z.push_back(values[i]);
    out.t_reached.push_back(t_reached[i]);
    out.residuals.push_back(values[i] - out.fitted.evaluate(xs[i]));
    out.max_residual = std::max(out.max_residual, std::abs(out.residuals.back()));
    out.trajectories.push_back(std::move(*trajs[i]));
  }

  for (double e : {0.0, 1.0}) {
    const double gap =
        std::abs(out.fitted.evaluate(e) - out.endpoints.evaluate(e));
    if (gap > 1e-4) {
      std::ostringstream os;
      os << "calibration: fitted and endpoint curves differ by " << gap
         << " at x = " << e << "; steady response is not affine";
      throw NumericError(os.str());
    }
  }
  if (std::abs(out.fitted.evaluate(1.0) + 1.0) > 1e-5) {
    throw NumericError("calibration: curve does not reach -1 at x = 1");
  }
  return out;
}

std::vector<Fig2Row> sweep_fig2(double gamma, const std::vector<double>& x_grid,
                                const std::vector<double>& t_grid,
                                const IntegratorConfig& cfg, double lambda,
                                int threads) {
  if (x_grid.empty() || t_grid.empty()) {
    throw ConfigError("fig2: grids must be non-empty");
  }
  if (!(gamma >= 0.0)) throw ConfigError("fig2: gamma must be >= 0");
  if (!(lambda > 0.0)) throw ConfigError("fig2: lambda must be > 0");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] < 0.0 || (i > 0 && t_grid[i] < t_grid[i - 1])) {
      throw ConfigError("fig2: t grid must be non-negative and sorted");
    }
  }
  IntegratorConfig icfg = cfg;
  icfg.t_end = t_grid.back();
  icfg.validate();

  const ComplexMatrix h = h_eff({lambda, lambda, lambda});
  const std::vector<LindbladChannel> decay = {probe_decay(gamma)};
  const ComplexMatrix sz = pauli_local(PauliAxis::kZ);

  const int nx = static_cast<int>(x_grid.size());
  const std::size_t nt = t_grid.size();
  std::vector<Fig2Row> rows(nx * nt);
  internal::parallel_for(nx, threads, [&](int i) {
    MasterEquation eq(h, decay);
    ComplexMatrix rho = with_ground_probe(werner(x_grid[i])).matrix();
    double t_now = 0.0;
    for (std::size_t j = 0; j < nt; ++j) {
      eq.advance(rho, t_grid[j] - t_now, icfg.dt);
      t_now = t_grid[j];
      const DensityMatrix probe =
          checked_state(rho, three_qubit_layout(), icfg.trace_tol, t_now)
              .reduce({"q3"});
      rows[i * nt + j] = {x_grid[i], t_now, expectation(probe, sz),
                          probe.population(1)};
    }
  });
  return rows;
}

std::vector<Fig3Row> sweep_fig3(const std::vector<double>& x_grid,
                                const std::vector<double>& gamma_grid,
                                const SequentialConfig& base, int threads) {
  if (x_grid.empty() || gamma_grid.empty()) {
    throw ConfigError("fig3: grids must be non-empty");
  }
  const std::size_t ng = gamma_grid.size();
  const int total = static_cast<int>(x_grid.size() * ng);
  std::vector<Fig3Row> rows(total);
  internal::parallel_for(total, threads, [&](int k) {
    const double x = x_grid[k / ng];
    SequentialConfig cfg = base;
    cfg.gamma = gamma_grid[k % ng];
    const ProtocolReport r = run_sequential(werner(x), cfg);
    rows[k] = {x, cfg.gamma, r.fidelity_12, r.delta_x};
  });
  return rows;
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 1) throw ConfigError("linspace: count must be >= 1");
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = start;
    return v;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) v[i] = start + i * step;
  v.back() = stop;
  return v;
}

}  // namespace wqnd
