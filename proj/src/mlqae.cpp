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

#include "qaelab/mlqae.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qaelab/golden_section.hpp"

namespace qaelab {

namespace {

constexpr double kLogFloor = 1e-300;
constexpr double kRefineTolerance = 1e-10;

double clamped_log(double x) { return std::log(std::max(x, kLogFloor)); }

}  // namespace

ScheduleKind parse_schedule_kind(std::string_view name) {
  if (name == "eis" || name == "EIS") return ScheduleKind::EIS;
  if (name == "lis" || name == "LIS") return ScheduleKind::LIS;
  throw std::invalid_argument("unknown schedule '" + std::string(name) + "'");
}

std::string_view to_string(ScheduleKind kind) { return kind == ScheduleKind::EIS ? "eis" : "lis"; }

Schedule eis_schedule(std::uint64_t m) {
  if (m > 62) throw std::invalid_argument("EIS depth above 62 overflows the Q-power");
  Schedule s{ScheduleKind::EIS, m, {0}};
  for (std::uint64_t k = 1; k <= m; ++k) s.powers.push_back(std::uint64_t{1} << (k - 1));
  return s;
}

Schedule lis_schedule(std::uint64_t m) {
  Schedule s{ScheduleKind::LIS, m, {}};
  for (std::uint64_t k = 0; k <= m; ++k) s.powers.push_back(k);
  return s;
}

Schedule make_schedule(ScheduleKind kind, std::uint64_t m) {
  return kind == ScheduleKind::EIS ? eis_schedule(m) : lis_schedule(m);
}

std::uint64_t oracle_call_count(const Schedule& schedule, std::uint64_t shots) {
  std::uint64_t per_shot = 0;
  for (std::uint64_t power : schedule.powers) per_shot += 2 * power + 1;
  return shots * per_shot;
}

double log_likelihood(std::span<const MeasurementRecord> records, double theta) {
  double total = 0.0;
  for (const MeasurementRecord& r : records) {
    const double angle = static_cast<double>(2 * r.power + 1) * theta;
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    const double misses = static_cast<double>(r.shots - r.hits);
    if (r.hits > 0) total += static_cast<double>(r.hits) * clamped_log(s * s);
    if (misses > 0) total += misses * clamped_log(c * c);
  }
  return total;
}

double maximize_likelihood(std::span<const MeasurementRecord> records) {
  if (records.empty()) throw std::invalid_argument("maximize_likelihood needs at least one record");
  for (const MeasurementRecord& r : records) {
    if (r.hits > r.shots) throw std::invalid_argument("record has more hits than shots");
  }

  constexpr std::size_t last = kLikelihoodGridPoints - 1;
  const double step = (std::numbers::pi / 2) / static_cast<double>(last);
  auto grid = [step](std::size_t i) { return i == last ? std::numbers::pi / 2 : step * static_cast<double>(i); };

  std::size_t best = 0;
  double best_value = log_likelihood(records, grid(0));
  for (std::size_t i = 1; i <= last; ++i) {
    const double value = log_likelihood(records, grid(i));
    if (value > best_value) {
      best = i;
      best_value = value;
    }
  }

  const double lo = grid(best == 0 ? 0 : best - 1);
  const double hi = grid(std::min(best + 1, last));
  const double refined = golden_section_maximize(
      [records](double t) { return log_likelihood(records, t); }, lo, hi, kRefineTolerance);
  return log_likelihood(records, refined) > best_value ? refined : grid(best);
}

MlqaeReport run_mlqae(const OracleSpec& oracle, std::uint64_t m, std::uint64_t shots,
                      ScheduleKind kind, Backend backend, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  const Schedule schedule = make_schedule(kind, m);
  FlagSampler sampler(backend, oracle);

  MlqaeReport report;
  report.records.reserve(schedule.powers.size());
  for (std::size_t k = 0; k < schedule.powers.size(); ++k) {
    Rng rng(derive_seed({seed, k}));
    const std::uint64_t power = schedule.powers[k];
    report.records.push_back({power, shots, sampler.measure(power, shots, rng)});
  }
  report.theta_hat = maximize_likelihood(report.records);
  const double s = std::sin(report.theta_hat);
  report.a_hat = std::clamp(s * s, 0.0, 1.0);
  report.oracle_calls = oracle_call_count(schedule, shots);
  report.log_likelihood_at_max = log_likelihood(report.records, report.theta_hat);
  return report;
}

}  // namespace qaelab
