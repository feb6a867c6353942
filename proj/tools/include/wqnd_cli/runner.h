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

#ifndef WQND_CLI_RUNNER_H_
#define WQND_CLI_RUNNER_H_

#include <map>
#include <string>

#include "wqnd/errors.h"
#include "wqnd_cli/run_config.h"

namespace wqnd::cli {

// Files produced by one run, keyed by file name, plus the text echoed to
// stdout. Nothing here depends on wall-clock time or thread scheduling.
struct RunOutput {
  std::map<std::string, std::string> files;
  std::string summary;
};

// Validates and executes the configuration.
RunOutput run(const RunConfig& cfg);

// Writes every file of `out` into `dir`, creating it if needed.
void write_outputs(const RunOutput& out, const std::string& dir);

// Process exit code for an error category: 2 config, 3 numeric, 4 convergence.
int exit_code(ErrorCategory category);

// "%.12g" formatting used for every number the CLI prints.
std::string format_number(double v);

}  // namespace wqnd::cli

#endif  // WQND_CLI_RUNNER_H_
