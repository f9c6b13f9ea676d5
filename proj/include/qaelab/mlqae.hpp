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

/**
 * @file
 * Maximum-likelihood amplitude estimation.
 *
 * A schedule of circuits Q^{m_k} A|0> is sampled with N_k shots each; the
 * hit counts h_k define the joint log-likelihood
 *
 *   log L(theta) = sum_k h_k log sin^2((2 m_k + 1) theta)
 *                      + (N_k - h_k) log cos^2((2 m_k + 1) theta)
 *
 * whose maximizer over [0, pi/2] is the estimate theta_hat.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qaelab/backend.hpp"
#include "qaelab/oracle.hpp"

namespace qaelab {

enum class ScheduleKind {
  EIS,  ///< powers 0, 1, 2, 4, ..., 2^(m-1)
  LIS,  ///< powers 0, 1, ..., m
};

ScheduleKind parse_schedule_kind(std::string_view name);
std::string_view to_string(ScheduleKind kind);

struct Schedule {
  ScheduleKind kind;
  std::uint64_t depth;
  std::vector<std::uint64_t> powers;
};

Schedule eis_schedule(std::uint64_t m);
Schedule lis_schedule(std::uint64_t m);
Schedule make_schedule(ScheduleKind kind, std::uint64_t m);

/// Evidence from one circuit Q^power A|0>.
struct MeasurementRecord {
  std::uint64_t power = 0;
  std::uint64_t shots = 0;
  std::uint64_t hits = 0;
};

struct MlqaeReport {
  double theta_hat = 0.0;
  double a_hat = 0.0;
  std::uint64_t oracle_calls = 0;
  std::vector<MeasurementRecord> records;
  double log_likelihood_at_max = 0.0;
};

/// shots * sum_k (2 m_k + 1): one A per circuit plus two per Q.
std::uint64_t oracle_call_count(const Schedule& schedule, std::uint64_t shots);

/// Joint log-likelihood with log(x) taken as log(max(x, 1e-300)).
double log_likelihood(std::span<const MeasurementRecord> records, double theta);

/// Uniform grid points used by the coarse stage of maximize_likelihood.
inline constexpr std::size_t kLikelihoodGridPoints = 100'000;

/// Global maximizer of log_likelihood on [0, pi/2]: best point of a uniform
/// grid (ties to the smallest theta), refined by golden-section search on the
/// neighbouring grid cells. The result never scores below the best grid point.
/// Throws std::invalid_argument on an empty record list.
double maximize_likelihood(std::span<const MeasurementRecord> records);

/// Samples every circuit of the schedule and maximizes the likelihood. Circuit
/// k draws from its own stream seeded by derive_seed({seed, k}).
MlqaeReport run_mlqae(const OracleSpec& oracle, std::uint64_t m, std::uint64_t shots,
                      ScheduleKind kind, Backend backend, std::uint64_t seed);

}  // namespace qaelab
