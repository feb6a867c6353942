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

#include "wqnd_cli/runner.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wqnd/full_model_validation.h"
#include "wqnd/protocols.h"
#include "wqnd/quantum_states.h"

namespace wqnd::cli {
namespace {

class Text {
 public:
  Text& kv(const std::string& key, double v) {
    os_ << key << " = " << format_number(v) << '\n';
    return *this;
  }
  Text& kv(const std::string& key, const std::string& v) {
    os_ << key << " = " << v << '\n';
    return *this;
  }
  Text& line(const std::string& s) {
    os_ << s << '\n';
    return *this;
  }
  std::string str() const { return os_.str(); }

 private:
  std::ostringstream os_;
};

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  for (double v : values) {
    if (!row.empty()) row += ',';
    row += format_number(v);
  }
  row += '\n';
  return row;
}

std::string grid_echo(const std::vector<double>& g) {
  std::string s;
  for (double v : g) {
    if (!s.empty()) s += ',';
    s += format_number(v);
  }
  return s;
}

void echo_integrator(Text& t, const IntegratorConfig& ic) {
  t.kv("dt", ic.dt).kv("record_every", ic.record_every).kv("trace_tol", ic.trace_tol);
}

void echo_sampling(Text& t, const RunConfig& cfg) {
  t.kv("shots", cfg.shots ? std::to_string(*cfg.shots) : std::string("exact"));
  t.kv("seed", std::to_string(cfg.seed));
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string csv = "t,sigma3z\n";
  const std::vector<double>& sz = traj.observables.at("sigma3z");
  for (std::size_t i = 0; i < traj.size(); ++i) csv += csv_row({traj.times[i], sz[i]});
  return csv;
}

void report_estimate(Text& t, const ProtocolReport& r) {
  t.line("").line("[result]");
  t.kv("x_true", r.x_true).kv("x_hat", r.x_hat).kv("delta_x", r.delta_x);
  t.kv("fidelity_12", r.fidelity_12);
  t.kv("probe_excited_population", r.probe_state.population(0));
  t.kv("clamped", r.estimate.clamped ? "yes" : "no");
  if (r.estimate.standard_error) t.kv("standard_error", *r.estimate.standard_error);
}

RunOutput run_joint_cli(const RunConfig& cfg) {
  const JointConfig jc = joint_config(cfg);
  const DensityMatrix rho = werner(cfg.x, cfg.bell);
  const ProtocolReport r = cfg.relabel ? run_joint_relabeled(rho, jc) : run_joint(rho, jc);

  Text t;
  t.line("[config]").kv("protocol", "joint").kv("x", cfg.x).kv("bell", std::string(to_string(cfg.bell)));
  t.kv("relabel", cfg.relabel ? "yes" : "no").kv("lambda", jc.lambda).kv("gamma", jc.gamma);
  echo_sampling(t, cfg);
  if (jc.gamma > 0.0) echo_integrator(t, jc.integrator);
  t.line("").line("[timing]").kv("t", jc.interaction_time());
  t.kv("lambda_t", jc.lambda * jc.interaction_time());
  report_estimate(t, r);

  RunOutput out;
  out.files["report.txt"] = t.str();
  if (r.trajectory) out.files["trajectory.csv"] = trajectory_csv(*r.trajectory);
  out.summary = out.files["report.txt"];
  return out;
}

RunOutput run_sequential_cli(const RunConfig& cfg) {
  const SequentialConfig sc = sequential_config(cfg);
  const ProtocolReport r = run_sequential(werner(cfg.x, cfg.bell), sc);

  Text t;
  t.line("[config]").kv("protocol", "sequential").kv("x", cfg.x);
  t.kv("bell", std::string(to_string(cfg.bell))).kv("lambda1", sc.lambda1).kv("lambda2", sc.lambda2);
  t.kv("n", sc.n).kv("gamma", sc.gamma);
  echo_sampling(t, cfg);
  if (sc.gamma > 0.0) echo_integrator(t, sc.integrator);
  t.line("").line("[timing]").kv("t1", sc.t1).kv("t2", sc.t2);
  report_estimate(t, r);

  RunOutput out;
  out.files["report.txt"] = t.str();
  if (r.trajectory) out.files["trajectory.csv"] = trajectory_csv(*r.trajectory);
  out.summary = out.files["report.txt"];
  return out;
}

RunOutput run_calibrate_cli(const RunConfig& cfg) {
  const double gamma = resolved_gamma(cfg);
  const IntegratorConfig ic = resolved_integrator(cfg);
  const CalibrationResult c =
      run_dissipative_calibration(gamma, resolved_x_grid(cfg), ic, cfg.lambda, cfg.threads);

  std::string csv = "x,sigma3z,fitted,residual,t_reached\n";
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    csv += csv_row({c.x[i], c.steady_sigma_z[i], c.fitted.evaluate(c.x[i]), c.residuals[i],
                    c.t_reached[i]});
  }

  Text t;
  t.line("[config]").kv("protocol", "calibrate").kv("lambda", cfg.lambda).kv("gamma", gamma);
  t.kv("x_grid", grid_echo(resolved_x_grid(cfg)));
  echo_integrator(t, ic);
  t.kv("t_end", ic.t_end).kv("steady_eps", ic.steady_eps);
  t.line("").line("[timing]");
  t.kv("max_t_reached", *std::max_element(c.t_reached.begin(), c.t_reached.end()));
  t.line("").line("[result]");
  t.kv("slope", c.fitted.slope).kv("intercept", c.fitted.intercept);
  t.kv("endpoint_slope", c.endpoints.slope).kv("endpoint_intercept", c.endpoints.intercept);
  t.kv("max_residual", c.max_residual);

  RunOutput out;
  out.files["calibration.csv"] = csv;
  out.files["report.txt"] = t.str();
  out.summary = out.files["report.txt"];
  return out;
}

RunOutput run_fig2_cli(const RunConfig& cfg) {
  const double gamma = resolved_gamma(cfg);
  const IntegratorConfig ic = resolved_integrator(cfg);
  const std::vector<double> xs = resolved_x_grid(cfg);
  const std::vector<double> ts = resolved_t_grid(cfg);
  const std::vector<Fig2Row> rows = sweep_fig2(gamma, xs, ts, ic, cfg.lambda, cfg.threads);

  std::string csv = "x,t,sigma3z,ground_population\n";
  for (const Fig2Row& r : rows) csv += csv_row({r.x, r.t, r.sigma3z, r.ground_population});

  Text t;
  t.line("[config]").kv("protocol", "fig2").kv("lambda", cfg.lambda).kv("gamma", gamma);
  t.kv("x_grid", grid_echo(xs)).kv("t_grid", grid_echo(ts));
  echo_integrator(t, ic);
  t.line("").line("[result]").kv("rows", static_cast<double>(rows.size()));

  RunOutput out;
  out.files["fig2.csv"] = csv;
  out.files["report.txt"] = t.str();
  out.summary = out.files["report.txt"];
  return out;
}

RunOutput run_fig3_cli(const RunConfig& cfg) {
  const SequentialConfig base = sequential_config(cfg);
  const std::vector<double> xs = resolved_x_grid(cfg);
  const std::vector<double> gs = resolved_gamma_grid(cfg);
  const std::vector<Fig3Row> rows = sweep_fig3(xs, gs, base, cfg.threads);

  std::string csv = "x,gamma,fidelity,delta_x\n";
  double max_dx = 0.0;
  double min_f = 1.0;
  for (const Fig3Row& r : rows) {
    csv += csv_row({r.x, r.gamma, r.fidelity, r.delta_x});
    max_dx = std::max(max_dx, r.delta_x);
    min_f = std::min(min_f, r.fidelity);
  }

  Text t;
  t.line("[config]").kv("protocol", "fig3").kv("lambda1", base.lambda1);
  t.kv("lambda2", base.lambda2).kv("n", base.n);
  t.kv("x_grid", grid_echo(xs)).kv("gamma_grid", grid_echo(gs));
  echo_integrator(t, base.integrator);
  t.line("").line("[timing]").kv("t1", base.t1).kv("t2", base.t2);
  t.line("").line("[result]").kv("rows", static_cast<double>(rows.size()));
  t.kv("max_delta_x", max_dx).kv("min_fidelity", min_f);

  RunOutput out;
  out.files["fig3.csv"] = csv;
  out.files["report.txt"] = t.str();
  out.summary = out.files["report.txt"];
  return out;
}

RunOutput run_full_model_cli(const RunConfig& cfg) {
  const FullModelValidationConfig fc = full_model_config(cfg);
  const FullModelValidationReport r = validate_full_model(fc);

  std::string csv = "t,excited_full,excited_effective,excited_dispersive\n";
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    csv += csv_row({r.times[i], r.excited_full[i], r.excited_effective[i],
                    r.excited_dispersive[i]});
  }

  Text t;
  t.line("[config]").kv("protocol", "validate-full-model").kv("x", fc.x);
  t.kv("g", fc.params.g).kv("delta", fc.params.delta).kv("omega_ratio", cfg.omega_ratio);
  t.kv("n_max", fc.params.n_max).kv("samples", fc.samples).kv("cutoff_tol", fc.cutoff_tol);
  t.line("").line("[timing]").kv("lambda", r.lambda).kv("window", r.window);
  t.line("").line("[result]").kv("max_deviation", r.max_deviation);
  t.kv("max_deviation_dispersive", r.max_deviation_dispersive);
  t.kv("cutoff_difference", r.cutoff_difference);
  t.kv("passed", r.passed ? "yes" : "no");
  for (const std::string& w : r.warnings) t.kv("warning", w);

  RunOutput out;
  out.files["full_model.csv"] = csv;
  out.files["report.txt"] = t.str();
  out.summary = out.files["report.txt"];
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kConfig:
      return 2;
    case ErrorCategory::kNumeric:
      return 3;
    case ErrorCategory::kConvergence:
      return 4;
  }
  return 3;
}

RunOutput run(const RunConfig& cfg) {
  validate(cfg);
  switch (cfg.protocol) {
    case Protocol::kJoint:
      return run_joint_cli(cfg);
    case Protocol::kSequential:
      return run_sequential_cli(cfg);
    case Protocol::kCalibrate:
      return run_calibrate_cli(cfg);
    case Protocol::kFig2:
      return run_fig2_cli(cfg);
    case Protocol::kFig3:
      return run_fig3_cli(cfg);
    case Protocol::kValidateFullModel:
      return run_full_model_cli(cfg);
  }
  throw ConfigError("unknown protocol");
}

void write_outputs(const RunOutput& out, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
  for (const auto& [name, content] : out.files) {
    const std::filesystem::path path = std::filesystem::path(dir) / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
    if (!f) throw ConfigError("cannot write " + path.string());
  }
}

}  // namespace wqnd::cli
