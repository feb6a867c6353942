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

#include "wqnd_cli/run_config.h"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "wqnd/errors.h"
#include "wqnd/model_operators.h"

namespace wqnd::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value,
                            const std::string& where, const char* expected) {
  std::ostringstream os;
  os << where << ": malformed value '" << value << "' for " << key << " (expected "
     << expected << ")";
  throw ConfigError(os.str());
}

double to_double(std::string_view key, std::string_view v, const std::string& where) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    bad_value(key, v, where, "a finite number");
  }
  return out;
}

std::int64_t to_int(std::string_view key, std::string_view v, const std::string& where) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    bad_value(key, v, where, "an integer");
  }
  return out;
}

int to_small_int(std::string_view key, std::string_view v, const std::string& where) {
  const std::int64_t n = to_int(key, v, where);
  if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
    bad_value(key, v, where, "an integer in int range");
  }
  return static_cast<int>(n);
}

bool to_bool(std::string_view key, std::string_view v, const std::string& where) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad_value(key, v, where, "true or false");
}

using Setter = std::function<void(RunConfig&, std::string_view, const std::string&)>;

struct KeySpec {
  KeyHelp help;
  Setter set;
};

#define WQND_DOUBLE(field) \
  [](RunConfig& c, std::string_view v, const std::string& w) { c.field = to_double(#field, v, w); }

const std::vector<KeySpec>& key_specs() {
  static const std::vector<KeySpec> specs = {
      {{"protocol", "general",
        "joint | sequential | calibrate | fig2 | fig3 | validate-full-model"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         try {
           c.protocol = parse_protocol(v);
         } catch (const ConfigError&) {
           bad_value("protocol", v, w, "a protocol name");
         }
       }},
      {{"threads", "general", "worker threads for sweeps (default 1)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.threads = to_small_int("threads", v, w);
       }},
      {{"seed", "general", "measurement sampling seed (default 0)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         const std::int64_t s = to_int("seed", v, w);
         if (s < 0) bad_value("seed", v, w, "a non-negative integer");
         c.seed = static_cast<std::uint64_t>(s);
       }},
      {{"shots", "general", "sampled probe measurements (default: exact readout)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.shots = to_int("shots", v, w);
       }},
      {{"x", "state", "Werner mixing parameter in [0, 1] (default 0.5)"}, WQND_DOUBLE(x)},
      {{"bell", "state", "psi-minus | psi-plus | phi-minus | phi-plus (default psi-minus)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         try {
           c.bell = parse_bell_kind(v);
         } catch (const ConfigError&) {
           bad_value("bell", v, w, "psi-minus, psi-plus, phi-minus or phi-plus");
         }
       }},
      {{"relabel", "state", "apply the Bell relabelling around the joint run"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.relabel = to_bool("relabel", v, w);
       }},
      {{"lambda", "joint", "effective coupling (default 1)"}, WQND_DOUBLE(lambda)},
      {{"t", "joint", "interaction time (default pi / (2 lambda))"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.t = to_double("t", v, w);
       }},
      {{"gamma", "joint", "probe decay rate (default 0; 0.1 for calibrate and fig2)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.gamma = to_double("gamma", v, w);
       }},
      {{"lambda1", "sequential", "coupling in the first cavity (default 1)"},
       WQND_DOUBLE(lambda1)},
      {{"lambda2", "sequential", "coupling in the second cavity (default 1)"},
       WQND_DOUBLE(lambda2)},
      {{"t1", "sequential", "first interaction time (default pi / (2 lambda1))"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.t1 = to_double("t1", v, w);
       }},
      {{"t2", "sequential",
        "second interaction time (default (lambda1/lambda2) t1 + 2 n pi / lambda2)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.t2 = to_double("t2", v, w);
       }},
      {{"n", "sequential", "timing-condition winding number (default 0)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.n = to_small_int("n", v, w);
       }},
      {{"dt", "integrator", "RK4 step (default 1e-3)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.integrator.dt = to_double("dt", v, w);
       }},
      {{"t_end", "integrator", "steady-state time budget (default 1000)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.integrator.t_end = to_double("t_end", v, w);
         c.t_end_set = true;
       }},
      {{"record_every", "integrator", "steps between recorded states (default 1)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.integrator.record_every = to_small_int("record_every", v, w);
       }},
      {{"trace_tol", "integrator", "allowed trace drift (default 1e-8)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.integrator.trace_tol = to_double("trace_tol", v, w);
       }},
      {{"steady_eps", "integrator", "steady-state generator norm (default 1e-8)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.integrator.steady_eps = to_double("steady_eps", v, w);
       }},
      {{"x_grid", "sweep", "x values (default 0:1:11; 0:1:21 for fig3)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         try {
           c.x_grid = parse_grid(v);
         } catch (const ConfigError&) {
           bad_value("x_grid", v, w, "start:stop:count or a comma list");
         }
       }},
      {{"t_grid", "sweep", "fig2 times (default 0:50:101)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         try {
           c.t_grid = parse_grid(v);
         } catch (const ConfigError&) {
           bad_value("t_grid", v, w, "start:stop:count or a comma list");
         }
       }},
      {{"gamma_grid", "sweep", "fig3 decay rates (default 0:0.1:11)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         try {
           c.gamma_grid = parse_grid(v);
         } catch (const ConfigError&) {
           bad_value("gamma_grid", v, w, "start:stop:count or a comma list");
         }
       }},
      {{"g", "full_model", "atom-cavity coupling (default 1)"}, WQND_DOUBLE(g)},
      {{"delta", "full_model", "atom-cavity detuning (default 20)"}, WQND_DOUBLE(delta)},
      {{"omega_ratio", "full_model", "drive amplitude in units of lambda (default 10)"},
       WQND_DOUBLE(omega_ratio)},
      {{"n_max", "full_model", "photon cutoff per cavity (default 2)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.n_max = to_small_int("n_max", v, w);
       }},
      {{"samples", "full_model", "comparison time points (default 201)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.samples = to_small_int("samples", v, w);
       }},
      {{"window", "full_model", "comparison window (default pi / lambda)"},
       [](RunConfig& c, std::string_view v, const std::string& w) {
         c.window = to_double("window", v, w);
       }},
      {{"cutoff_tol", "full_model", "allowed gap between cutoffs n_max and n_max + 1 (default 1e-3)"},
       WQND_DOUBLE(cutoff_tol)},
  };
  return specs;
}

#undef WQND_DOUBLE

const KeySpec* find_key(std::string_view key) {
  for (const KeySpec& s : key_specs()) {
    if (key == s.help.key) return &s;
  }
  return nullptr;
}

bool known_section(std::string_view name) {
  for (const KeySpec& s : key_specs()) {
    if (name == s.help.section) return true;
  }
  return false;
}

std::string where_of(const RunConfig& cfg, const std::string& key) {
  const auto it = cfg.origin.find(key);
  return it == cfg.origin.end() ? std::string("default ") + key : it->second;
}

[[noreturn]] void rethrow_at(const Error& e, const std::string& where) {
  const std::string msg = where + ": " + e.what();
  switch (e.category()) {
    case ErrorCategory::kConfig:
      throw ConfigError(msg);
    case ErrorCategory::kNumeric:
      throw NumericError(msg);
    case ErrorCategory::kConvergence:
      throw ConvergenceError(msg);
  }
  throw ConfigError(msg);
}

void require(bool ok, const RunConfig& cfg, const std::string& key,
             const std::string& what) {
  if (!ok) throw ConfigError(where_of(cfg, key) + ": " + what);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

std::string to_string(Protocol p) {
  switch (p) {
    case Protocol::kJoint:
      return "joint";
    case Protocol::kSequential:
      return "sequential";
    case Protocol::kCalibrate:
      return "calibrate";
    case Protocol::kFig2:
      return "fig2";
    case Protocol::kFig3:
      return "fig3";
    case Protocol::kValidateFullModel:
      return "validate-full-model";
  }
  return "unknown";
}

Protocol parse_protocol(std::string_view name) {
  for (Protocol p : {Protocol::kJoint, Protocol::kSequential, Protocol::kCalibrate,
                     Protocol::kFig2, Protocol::kFig3, Protocol::kValidateFullModel}) {
    if (to_string(p) == name) return p;
  }
  throw ConfigError("unknown protocol '" + std::string(name) + "'");
}

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ':') {
        parts.push_back(trim(text.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (parts.size() != 3) throw ConfigError("grid range needs start:stop:count");
    const std::string w = "grid";
    const double a = to_double("grid start", parts[0], w);
    const double b = to_double("grid stop", parts[1], w);
    const std::int64_t count = to_int("grid count", parts[2], w);
    if (count < 1 || count > 1'000'000) throw ConfigError("grid count out of range");
    return linspace(a, b, static_cast<int>(count));
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      out.push_back(to_double("grid entry", trim(text.substr(start, i - start)), "grid"));
      start = i + 1;
    }
  }
  return out;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value,
                   const std::string& where) {
  const KeySpec* spec = find_key(key);
  if (spec == nullptr) {
    throw ConfigError(where + ": unknown key '" + std::string(key) + "'");
  }
  if (value.empty()) {
    throw ConfigError(where + ": missing value for " + std::string(key));
  }
  spec->set(cfg, value, where);
  cfg.origin[std::string(key)] = where;
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  RunConfig cfg = std::move(base);
  std::string section;
  std::map<std::string, int> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);

    const auto comment = line.find_first_of("#;");
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + ": malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!known_section(section)) {
        throw ConfigError(where + ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const KeySpec* spec = find_key(key);
    if (spec == nullptr) throw ConfigError(where + ": unknown key '" + key + "'");
    if (!section.empty() && section != spec->help.section) {
      throw ConfigError(where + ": key '" + key + "' belongs in [" +
                        spec->help.section + "], not [" + section + "]");
    }
    if (const auto it = seen.find(key); it != seen.end()) {
      throw ConfigError(where + ": duplicate key '" + key + "' (first set on line " +
                        std::to_string(it->second) + ")");
    }
    seen[key] = line_no;
    apply_setting(cfg, key, value, where);
    if (end == text.size()) break;
  }
  return cfg;
}

void apply_override(RunConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("--set " + std::string(assignment) + ": expected key=value");
  }
  const std::string key(trim(assignment.substr(0, eq)));
  apply_setting(cfg, key, trim(assignment.substr(eq + 1)), "--set " + key);
}

const std::vector<KeyHelp>& config_keys() {
  static const std::vector<KeyHelp> keys = [] {
    std::vector<KeyHelp> out;
    for (const KeySpec& s : key_specs()) out.push_back(s.help);
    return out;
  }();
  return keys;
}

double resolved_gamma(const RunConfig& cfg) {
  if (cfg.gamma) return *cfg.gamma;
  return (cfg.protocol == Protocol::kCalibrate || cfg.protocol == Protocol::kFig2) ? 0.1
                                                                                  : 0.0;
}

std::vector<double> resolved_x_grid(const RunConfig& cfg) {
  if (cfg.x_grid) return *cfg.x_grid;
  return linspace(0.0, 1.0, cfg.protocol == Protocol::kFig3 ? 21 : 11);
}

std::vector<double> resolved_t_grid(const RunConfig& cfg) {
  return cfg.t_grid ? *cfg.t_grid : linspace(0.0, 50.0, 101);
}

std::vector<double> resolved_gamma_grid(const RunConfig& cfg) {
  return cfg.gamma_grid ? *cfg.gamma_grid : linspace(0.0, 0.1, 11);
}

IntegratorConfig resolved_integrator(const RunConfig& cfg) {
  IntegratorConfig ic = cfg.integrator;
  if (!cfg.t_end_set) ic.t_end = 1000.0;
  return ic;
}

JointConfig joint_config(const RunConfig& cfg) {
  JointConfig jc;
  jc.lambda = cfg.lambda;
  jc.t = cfg.t;
  jc.gamma = resolved_gamma(cfg);
  jc.shots = cfg.shots;
  jc.seed = cfg.seed;
  jc.integrator = resolved_integrator(cfg);
  return jc;
}

SequentialConfig sequential_config(const RunConfig& cfg) {
  SequentialConfig sc;
  sc.lambda1 = cfg.lambda1;
  sc.lambda2 = cfg.lambda2;
  sc.n = cfg.n;
  if (cfg.lambda1 > 0.0 && cfg.lambda2 > 0.0) {
    sc.t1 = cfg.t1.value_or(std::numbers::pi / (2.0 * cfg.lambda1));
    sc.t2 = cfg.t2.value_or(SequentialConfig::matched_t2(cfg.lambda1, cfg.lambda2, sc.t1, cfg.n));
  } else {
    sc.t1 = cfg.t1.value_or(0.0);
    sc.t2 = cfg.t2.value_or(0.0);
  }
  sc.gamma = resolved_gamma(cfg);
  sc.shots = cfg.shots;
  sc.seed = cfg.seed;
  sc.integrator = resolved_integrator(cfg);
  return sc;
}

FullModelValidationConfig full_model_config(const RunConfig& cfg) {
  FullModelValidationConfig fc;
  fc.params = FullModelParams::resonant(cfg.g, cfg.delta, cfg.omega_ratio, cfg.n_max);
  fc.x = cfg.x;
  fc.samples = cfg.samples;
  fc.window = cfg.window;
  fc.cutoff_tol = cfg.cutoff_tol;
  return fc;
}

void validate(const RunConfig& cfg) {
  require(cfg.threads >= 1, cfg, "threads", "threads must be at least 1");
  require(!cfg.shots || *cfg.shots > 0, cfg, "shots", "shots must be positive");
  require(in_unit_interval(cfg.x), cfg, "x",
          "x = " + fmt(cfg.x) + " outside the Werner mixing domain [0, 1]");
  if (cfg.gamma) {
    require(*cfg.gamma >= 0.0, cfg, "gamma", "gamma must be non-negative");
  }
  for (double v : resolved_x_grid(cfg)) {
    require(in_unit_interval(v), cfg, "x_grid",
            "x_grid value " + fmt(v) + " outside the Werner mixing domain [0, 1]");
  }
  if (cfg.relabel && cfg.protocol != Protocol::kJoint) {
    require(false, cfg, "relabel", "relabel is only supported by the joint protocol");
  }

  try {
    resolved_integrator(cfg).validate();
  } catch (const Error& e) {
    rethrow_at(e, "integrator settings");
  }

  switch (cfg.protocol) {
    case Protocol::kJoint:
      try {
        joint_config(cfg).validate();
      } catch (const Error& e) {
        rethrow_at(e, cfg.t ? where_of(cfg, "t") : where_of(cfg, "lambda"));
      }
      break;
    case Protocol::kSequential:
      require(cfg.lambda1 > 0.0, cfg, "lambda1", "lambda1 must be positive");
      require(cfg.lambda2 > 0.0, cfg, "lambda2", "lambda2 must be positive");
      try {
        sequential_config(cfg).validate();
      } catch (const Error& e) {
        rethrow_at(e, cfg.t2 ? where_of(cfg, "t2") : where_of(cfg, "t1"));
      }
      break;
    case Protocol::kCalibrate:
    case Protocol::kFig2:
      require(resolved_gamma(cfg) > 0.0, cfg, "gamma",
              "this protocol needs a positive gamma");
      require(cfg.lambda > 0.0, cfg, "lambda", "lambda must be positive");
      if (cfg.protocol == Protocol::kFig2) {
        for (double t : resolved_t_grid(cfg)) {
          require(t >= 0.0, cfg, "t_grid", "t_grid values must be non-negative");
        }
      }
      break;
    case Protocol::kFig3:
      for (double g : resolved_gamma_grid(cfg)) {
        require(g >= 0.0, cfg, "gamma_grid", "gamma_grid values must be non-negative");
      }
      try {
        SequentialConfig base = sequential_config(cfg);
        base.gamma = 0.0;
        base.validate();
      } catch (const Error& e) {
        rethrow_at(e, cfg.t2 ? where_of(cfg, "t2") : where_of(cfg, "t1"));
      }
      break;
    case Protocol::kValidateFullModel:
      require(cfg.delta != 0.0, cfg, "delta", "delta must be non-zero");
      try {
        full_model_config(cfg).validate();
      } catch (const Error& e) {
        rethrow_at(e, "full-model settings");
      }
      break;
  }
}

}  // namespace wqnd::cli
