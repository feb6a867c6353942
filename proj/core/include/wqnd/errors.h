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

#ifndef WQND_ERRORS_H_
#define WQND_ERRORS_H_

#include <stdexcept>
#include <string>

namespace wqnd {

// Broad failure categories. The CLI maps these onto process exit codes.
enum class ErrorCategory {
  kConfig,       // malformed or out-of-range user input
  kNumeric,      // dimension mismatch, broken invariant, violated constraint
  kConvergence,  // a bounded iteration did not reach its target
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::kConfig, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(ErrorCategory::kNumeric, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorCategory::kConvergence, what) {}
};

}  // namespace wqnd

#endif  // WQND_ERRORS_H_
