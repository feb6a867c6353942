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

#ifndef WQND_CLI_RUN_CONFIG_H_
#define WQND_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wqnd/dynamics.h"
#include "wqnd/full_model_validation.h"
#include "wqnd/protocols.h"
#include "wqnd/quantum_states.h"

namespace wqnd::cli {

enum class Protocol {
  kJoint,
  kSequential,
  kCalibrate,
  kFig2,
  kFig3,
  kValidateFullModel,
};

std::string to_string(Protocol p);
Protocol parse_protocol(std::string_view name);

// Everything a CLI run needs. Optional fields fall back to per-protocol
// defaults in the runner; `origin` remembers where each key was set so that
// later validation errors can point at the offending line.
struct RunConfig {
  Protocol protocol = Protocol::kJoint;

  double x = 0.5;
  BellKind bell = BellKind::kPsiMinus;
  bool relabel = false;

  double lambda = 1.0;
  std::optional<double> t;
  std::optional<double> gamma;
  std::optional<std::int64_t> shots;
  std::uint64_t seed = 0;

  double lambda1 = 1.0;
  double lambda2 = 1.0;
  std::optional<double> t1;
  std::optional<double> t2;
  int n = 0;

  IntegratorConfig integrator;
  bool t_end_set = false;

  std::optional<std::vector<double>> x_grid;
  std::optional<std::vector<double>> t_grid;
  std::optional<std::vector<double>> gamma_grid;

  double g = 1.0;
  double delta = 20.0;
  double omega_ratio = 10.0;
  int n_max = 2;
  int samples = 201;
  std::optional<double> window;
  double cutoff_tol = 1e-3;

  int threads = 1;
  std::string out_dir = ".";

  // key -> "line N" or "--set"
  std::map<std::string, std::string> origin;
};

// Applies one `key = value` assignment. `where` is used in error messages.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value,
                   const std::string& where);

// INI-style text: `key = value` lines, optional `[section]` headers,
// `#` or `;` comments. Unknown keys, unknown sections, duplicates and
// malformed values throw ConfigError naming the line.
RunConfig parse_config(std::string_view text, RunConfig base = {});

// Applies `key=value` overrides given on the command line.
void apply_override(RunConfig& cfg, std::string_view assignment);

// Range and constraint checks that need the whole configuration. Errors keep
// their module category and are prefixed with the origin of the key at fault.
void validate(const RunConfig& cfg);

// Module configurations with per-protocol defaults filled in.
double resolved_gamma(const RunConfig& cfg);
std::vector<double> resolved_x_grid(const RunConfig& cfg);
std::vector<double> resolved_t_grid(const RunConfig& cfg);
std::vector<double> resolved_gamma_grid(const RunConfig& cfg);
IntegratorConfig resolved_integrator(const RunConfig& cfg);
JointConfig joint_config(const RunConfig& cfg);
SequentialConfig sequential_config(const RunConfig& cfg);
FullModelValidationConfig full_model_config(const RunConfig& cfg);

// Grid syntax: "start:stop:count" or a comma-separated list.
std::vector<double> parse_grid(std::string_view text);

// Keys accepted by parse_config, with a short description and default.
struct KeyHelp {
  const char* key;
  const char* section;
  const char* description;
};
const std::vector<KeyHelp>& config_keys();

}  // namespace wqnd::cli

#endif  // WQND_CLI_RUN_CONFIG_H_
