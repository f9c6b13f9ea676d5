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

#include "qaelab/backend.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaelab/amplification.hpp"

namespace qaelab {

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) {
  std::vector<std::uint32_t> halves;
  halves.reserve(2 * words.size());
  for (std::uint64_t w : words) {
    halves.push_back(static_cast<std::uint32_t>(w));
    halves.push_back(static_cast<std::uint32_t>(w >> 32));
  }
  std::seed_seq seq(halves.begin(), halves.end());
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

Backend parse_backend(std::string_view name) {
  if (name == "sv" || name == "statevector") return Backend::Statevector;
  if (name == "analytic") return Backend::Analytic;
  throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

std::string_view to_string(Backend backend) {
  return backend == Backend::Statevector ? "sv" : "analytic";
}

FlagSampler::FlagSampler(Backend backend, const OracleSpec& oracle)
    : backend_(backend), oracle_(oracle) {}

double FlagSampler::probability(std::uint64_t m) {
  if (backend_ == Backend::Analytic) return analytic_flag_probability(oracle_, m);
  auto it = cache_.find(m);
  if (it == cache_.end()) {
    it = cache_.emplace(m, simulated_flag_probability<double>(oracle_, m)).first;
  }
  return it->second;
}

std::uint64_t FlagSampler::measure(std::uint64_t m, std::uint64_t shots, Rng& rng) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  const double p = std::clamp(probability(m), 0.0, 1.0);
  if (p <= 0.0) return 0;
  if (p >= 1.0) return shots;
  std::binomial_distribution<std::uint64_t> hits(shots, p);
  return hits(rng);
}

std::uint64_t measure_flag(Backend backend, const OracleSpec& oracle, std::uint64_t m,
                           std::uint64_t shots, Rng& rng) {
  FlagSampler sampler(backend, oracle);
  return sampler.measure(m, shots, rng);
}

}  // namespace qaelab
