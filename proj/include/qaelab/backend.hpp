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
#include <initializer_list>
#include <map>
#include <random>
#include <string_view>

#include "qaelab/oracle.hpp"

namespace qaelab {

using Rng = std::mt19937_64;

/// Mixes the given words into one 64-bit seed via std::seed_seq.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words);

/// Where flag probabilities come from. Both variants sample hit counts from
/// Binomial(shots, sin^2((2m+1) theta)); they differ only in how p is obtained.
enum class Backend {
  Statevector,  ///< simulate Q^m A|0> and take the flag marginal
  Analytic,     ///< evaluate sin^2((2m+1) theta) directly
};

/// Accepts "sv", "statevector", "analytic". Throws std::invalid_argument.
Backend parse_backend(std::string_view name);
std::string_view to_string(Backend backend);

/// Flag-qubit measurement for one oracle. Simulated probabilities are cached
/// per Q-power, so a sampler should be owned by a single run.
class FlagSampler {
 public:
  FlagSampler(Backend backend, const OracleSpec& oracle);

  double probability(std::uint64_t m);

  /// Hit count h ~ Binomial(shots, p(m)). Throws std::invalid_argument on
  /// shots == 0.
  std::uint64_t measure(std::uint64_t m, std::uint64_t shots, Rng& rng);

  const OracleSpec& oracle() const { return oracle_; }
  Backend backend() const { return backend_; }

 private:
  Backend backend_;
  OracleSpec oracle_;
  std::map<std::uint64_t, double> cache_;
};

/// One-off measurement; see FlagSampler::measure.
std::uint64_t measure_flag(Backend backend, const OracleSpec& oracle, std::uint64_t m,
                           std::uint64_t shots, Rng& rng);

}  // namespace qaelab
