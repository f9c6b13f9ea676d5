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

#include "qaelab/mci.hpp"

#include <stdexcept>

#include "qaelab/backend.hpp"
#include "qaelab/parallel.hpp"

namespace qaelab {

std::vector<double> run_mci(const MciConfig& config, unsigned jobs) {
  if (config.samples == 0) throw std::invalid_argument("samples must be positive");
  if (!(config.a_true >= 0.0 && config.a_true <= 1.0)) {
    throw std::invalid_argument("a_true must lie in [0, 1]");
  }
  std::vector<double> estimates(config.repetitions);
  parallel_for(config.repetitions, jobs, [&](std::size_t r) {
    Rng rng(derive_seed({config.seed, r}));
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < config.samples; ++s) {
      // One engine word per point: x is the high half, y the low half. The
      // integrand is constant, so x never decides a hit.
      const std::uint64_t word = rng();
      const double y = static_cast<double>(word & 0xffffffffu) * 0x1p-32;
      hits += y < config.a_true ? 1 : 0;
    }
    estimates[r] = static_cast<double>(hits) / static_cast<double>(config.samples);
  });
  return estimates;
}

}  // namespace qaelab
