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

#ifndef WQND_FULL_MODEL_VALIDATION_H_
#define WQND_FULL_MODEL_VALIDATION_H_

#include <optional>
#include <string>
#include <vector>

#include "wqnd/model_operators.h"

namespace wqnd {

// Compares the driven two-cavity model against the effective
// (lambda/2)(X1 + X2) X3 model, both started from werner(x) (x) |g> (x) |0,0>.
//
// The full model is evaluated in the frame rotating at the laser frequency
// and then moved into the interaction picture of the drive, Omega X3, which
// is the frame in which the effective model holds. The compared quantity is
// the probe excited-state population on t in [0, window].
struct FullModelValidationConfig {
  FullModelParams params = FullModelParams::resonant(1.0, 20.0, 10.0, 2);
  double x = 0.5;
  int samples = 201;
  // Defaults to pi / lambda, or 10 / g when lambda = 0.
  std::optional<double> window;
  double max_deviation = 0.1;
  // Allowed probe-population gap between cutoffs n_max and n_max + 1.
  double cutoff_tol = 1e-3;

  void validate() const;
};

struct FullModelValidationReport {
  double lambda = 0.0;
  double window = 0.0;
  std::vector<double> times;
  std::vector<double> excited_full;
  std::vector<double> excited_effective;
  std::vector<double> excited_dispersive;  // cavity-eliminated model
  double max_deviation = 0.0;
  double max_deviation_dispersive = 0.0;
  double cutoff_difference = 0.0;
  bool passed = false;
  std::vector<std::string> warnings;
};

// Throws ConvergenceError when cutoffs n_max and n_max + 1 disagree by more
// than cfg.cutoff_tol.
FullModelValidationReport validate_full_model(const FullModelValidationConfig& cfg);

}  // namespace wqnd

#endif  // WQND_FULL_MODEL_VALIDATION_H_
