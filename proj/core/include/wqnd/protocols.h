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

#ifndef WQND_PROTOCOLS_H_
#define WQND_PROTOCOLS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wqnd/dynamics.h"
#include "wqnd/quantum_states.h"

namespace wqnd {

// Below this value of sin^2(lambda t) the probe carries no information.
inline constexpr double kMinInformativeSin2 = 1e-6;

// Joint three-qubit protocol: probe coupled to both qubits at once under
// (lambda/2)(X1 + X2) X3 for time t.
struct JointConfig {
  double lambda = 1.0;
  std::optional<double> t;  // defaults to the gate time pi / (2 lambda)
  double gamma = 0.0;
  std::optional<std::int64_t> shots;
  std::uint64_t seed = 0;
  IntegratorConfig integrator;  // used when gamma > 0; t_end is ignored

  double interaction_time() const;
  void validate() const;
};

// Separated-cavity protocol: (lambda1/2) X1 X3 for t1, then (lambda2/2) X2 X3
// for t2, with t2 = (lambda1/lambda2) t1 + 2 n pi / lambda2.
struct SequentialConfig {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double t1 = 0.0;
  double t2 = 0.0;
  int n = 0;
  double gamma = 0.0;
  std::optional<std::int64_t> shots;
  std::uint64_t seed = 0;
  IntegratorConfig integrator;

  // t2 that satisfies the timing condition for the given n.
  static double matched_t2(double lambda1, double lambda2, double t1, int n);
  // Both gates at their pi/(2 lambda) gate time, n = 0.
  static SequentialConfig gate_times(double lambda1, double lambda2);

  void validate() const;
};

enum class CurveProvenance { kAnalyticEndpoints, kFitted };

// Affine map x -> <sigma_z^3> of the dissipative steady state.
struct CalibrationCurve {
  double slope = 0.0;
  double intercept = 0.0;
  double gamma = 0.0;
  CurveProvenance provenance = CurveProvenance::kFitted;

  double evaluate(double x) const { return slope * x + intercept; }
  // Unclamped inverse; throws NumericError for a flat curve.
  double invert(double sigma_z) const;
};

// Probe readout through the closed-system law P_e = (1 - x) sin^2(lambda t)/2.
// At the gate time this is x = -<sigma_z>.
struct TrajectoryReadout {
  double lambda_t = 0.0;
};

// Probe readout through a steady-state calibration curve.
struct SteadyReadout {
  std::optional<CalibrationCurve> curve;
};

using Readout = std::variant<TrajectoryReadout, SteadyReadout>;

struct Estimate {
  double x_hat = 0.0;
  double raw = 0.0;      // before clamping to [0, 1]
  bool clamped = false;
  std::optional<double> standard_error;  // binomial, only with shots
};

// Inverts a probe state to an estimate of x. With `shots`, the excited-state
// frequency of a sampled sigma_z measurement replaces the exact population.
Estimate estimate_x_from_probe(const DensityMatrix& probe,
                               const Readout& readout,
                               std::optional<std::int64_t> shots = std::nullopt,
                               std::uint64_t seed = 0);

// Convenience for the steady-state mode without a probe state.
double estimate_x_steady(const CalibrationCurve& curve, double sigma_z);

struct ProtocolReport {
  double x_true = 0.0;
  double x_hat = 0.0;
  double delta_x = 0.0;
  double fidelity_12 = 0.0;
  DensityMatrix probe_state;
  DensityMatrix state_12_after;
  Estimate estimate;
  std::optional<Trajectory> trajectory;
  std::string config_echo;
};

ProtocolReport run_joint(const DensityMatrix& rho12, const JointConfig& cfg);
ProtocolReport run_sequential(const DensityMatrix& rho12,
                              const SequentialConfig& cfg);

// bell_relabel -> run_joint -> bell_relabel. The report's post-measurement
// state and fidelity refer to the original (un-relabelled) input.
ProtocolReport run_joint_relabeled(const DensityMatrix& rho12,
                                   const JointConfig& cfg);

struct CalibrationResult {
  CalibrationCurve fitted;
  CalibrationCurve endpoints;
  std::vector<double> x;
  std::vector<double> steady_sigma_z;
  std::vector<double> residuals;
  std::vector<double> t_reached;
  double max_residual = 0.0;
  std::vector<Trajectory> trajectories;
};

// Steady <sigma_z^3> under the dissipative joint evolution for each x,
// least-squares affine fit, and the endpoint-curve linearity check.
// Throws ConvergenceError when any run misses cfg.steady_eps by cfg.t_end.
CalibrationResult run_dissipative_calibration(double gamma,
                                              const std::vector<double>& x_grid,
                                              const IntegratorConfig& cfg,
                                              double lambda = 1.0,
                                              int threads = 1);

struct Fig2Row {
  double x = 0.0;
  double t = 0.0;
  double sigma3z = 0.0;
  double ground_population = 0.0;
};

// <sigma_z^3>(t) under the dissipative joint evolution, rows ordered by x
// then t. t_grid must be non-decreasing and non-negative.
std::vector<Fig2Row> sweep_fig2(double gamma, const std::vector<double>& x_grid,
                                const std::vector<double>& t_grid,
                                const IntegratorConfig& cfg,
                                double lambda = 1.0, int threads = 1);

struct Fig3Row {
  double x = 0.0;
  double gamma = 0.0;
  double fidelity = 0.0;
  double delta_x = 0.0;
};

// Werner fidelity and estimation error of the sequential protocol, rows
// ordered by x then gamma. `base` supplies couplings, times and integrator.
std::vector<Fig3Row> sweep_fig3(const std::vector<double>& x_grid,
                                const std::vector<double>& gamma_grid,
                                const SequentialConfig& base, int threads = 1);

// start, start + step, ..., stop with `count` points.
std::vector<double> linspace(double start, double stop, int count);

}  // namespace wqnd

#endif  // WQND_PROTOCOLS_H_
