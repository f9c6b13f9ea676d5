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

#include <string>
#include <vector>

namespace qaelab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Brute-force self checks of the build: dense unitarity of Q, the rotation
/// identity against the scalar formula, reflection involutions, Clopper-Pearson
/// bounds against direct Binomial tail sums, and the half-plane power search
/// against an exhaustive scan.
std::vector<CheckResult> run_verification();

}  // namespace qaelab
