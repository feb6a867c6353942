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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wqnd/errors.h"
#include "wqnd_cli/run_config.h"
#include "wqnd_cli/runner.h"

namespace {

std::string key_listing() {
  std::ostringstream os;
  os << "\nConfig keys (INI `key = value`, optional [section] headers):\n";
  for (const wqnd::cli::KeyHelp& k : wqnd::cli::config_keys()) {
    os << "  [" << k.section << "] " << k.key << ": " << k.description << '\n';
  }
  os << "\nExit codes: 0 success, 2 config error, 3 numeric or constraint error, "
        "4 non-convergence.\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw wqnd::ConfigError("cannot read config file " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QND measurement of two-qubit Werner states"};
  app.footer(key_listing());
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir = "wqnd-out";
  std::int64_t seed = -1;
  int threads = 0;
  std::vector<std::string> overrides;
  bool quiet = false;
  app.add_option("--config", config_path, "INI config file");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--seed", seed, "measurement sampling seed");
  app.add_option("--threads", threads, "worker threads for sweeps");
  app.add_option("--set", overrides, "override a config key, key=value (repeatable)");
  app.add_flag("--quiet", quiet, "do not echo the report to stdout");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"joint", "joint three-qubit measurement"},
      {"sequential", "measurement through two separated cavities"},
      {"calibrate", "steady-state calibration curve"},
      {"fig2", "probe sigma_z versus x and t under decay (fig2.csv)"},
      {"fig3", "fidelity and error surface of the sequential protocol (fig3.csv)"},
      {"validate-full-model", "driven cavity model against the effective model"},
      {"run", "run the protocol named in the config file"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    using wqnd::cli::RunConfig;
    RunConfig cfg;
    if (!config_path.empty()) {
      try {
        cfg = wqnd::cli::parse_config(read_file(config_path));
      } catch (const wqnd::ConfigError& e) {
        throw wqnd::ConfigError(config_path + ": " + e.what());
      }
    }
    for (const std::string& o : overrides) wqnd::cli::apply_override(cfg, o);
    if (seed >= 0) {
      cfg.seed = static_cast<std::uint64_t>(seed);
      cfg.origin["seed"] = "--seed";
    }
    if (threads != 0) {
      cfg.threads = threads;
      cfg.origin["threads"] = "--threads";
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (command != "run") {
      const wqnd::cli::Protocol p = wqnd::cli::parse_protocol(command);
      if (cfg.origin.count("protocol") && cfg.protocol != p) {
        throw wqnd::ConfigError(cfg.origin["protocol"] + ": protocol = " +
                                wqnd::cli::to_string(cfg.protocol) +
                                " conflicts with subcommand " + command);
      }
      cfg.protocol = p;
    } else if (!cfg.origin.count("protocol")) {
      throw wqnd::ConfigError("run: the config does not name a protocol");
    }
    cfg.out_dir = out_dir;

    const wqnd::cli::RunOutput out = wqnd::cli::run(cfg);
    wqnd::cli::write_outputs(out, cfg.out_dir);
    if (!quiet) std::cout << out.summary;
    return 0;
  } catch (const wqnd::Error& e) {
    std::cerr << "wqnd: " << e.what() << '\n';
    return wqnd::cli::exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "wqnd: " << e.what() << '\n';
    return 3;
  }
}
