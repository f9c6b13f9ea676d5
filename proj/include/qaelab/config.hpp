// Copyright 2026 The qaelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qaelab/bench.hpp"

namespace qaelab {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads flat `key = value` lines; `#` starts a comment. Recognised keys:
///
///   algorithm   mlqae | iqae | mci          shots        16,32,...,1024
///   qubits      domain qubits n             repetitions  (alias reps)
///   a           target amplitude            seed         base seed
///   m           MLQAE depth                 backend      sv | analytic
///   schedule    eis | lis                   jobs         worker threads
///   epsilon, alpha, ratio                   IQAE parameters
///
/// Unknown keys, duplicates, and malformed values raise ConfigError with the
/// offending line number. The parsed config is checked with validate().
ExperimentConfig parse_experiment_config(std::istream& in);

}  // namespace qaelab
