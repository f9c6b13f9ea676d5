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

#include <cstdint>
#include <vector>

namespace qaelab {

/// Hit-or-miss Monte Carlo integration of the constant f(x) = a_true on [0, 1].
struct MciConfig {
  double a_true = 0.125;
  std::uint64_t samples = 1024;
  std::uint64_t repetitions = 1;
  std::uint64_t seed = 0;
};

/// One estimate per repetition: the fraction of uniform points (x, y) in the
/// unit square with y < a_true. Repetition r uses derive_seed({seed, r}), and
/// costs `samples` oracle calls. Throws std::invalid_argument on zero samples
/// or a_true outside [0, 1].
std::vector<double> run_mci(const MciConfig& config, unsigned jobs = 1);

}  // namespace qaelab
