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

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qaelab/mci.hpp"

namespace qaelab {
namespace {

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

double population_std(const std::vector<double>& v) {
  const double mu = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - mu) * (x - mu);
  return std::sqrt(s / v.size());
}

double mean_relative_error(const std::vector<double>& v, double a) {
  double s = 0.0;
  for (double x : v) s += std::abs(x - a) / a;
  return s / v.size();
}

TEST(Mci, ZeroIntegrandIsExact) {
  for (double x : run_mci({0.0, 1024, 50, 3})) EXPECT_EQ(x, 0.0);
}

TEST(Mci, UnitIntegrandIsExact) {
  for (double x : run_mci({1.0, 100, 20, 3})) EXPECT_EQ(x, 1.0);
}

TEST(Mci, EstimatesAreMultiplesOfOneOverSamples) {
  for (double x : run_mci({0.125, 64, 100, 8})) {
    EXPECT_DOUBLE_EQ(x * 64, std::round(x * 64));
  }
}

TEST(Mci, RejectsBadConfig) {
  EXPECT_THROW(run_mci({0.125, 0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(run_mci({1.5, 10, 1, 0}), std::invalid_argument);
}

TEST(Mci, DeterministicAndThreadCountInvariant) {
  const MciConfig config{0.125, 256, 200, 42};
  const auto serial = run_mci(config, 1);
  EXPECT_EQ(serial, run_mci(config, 1));
  EXPECT_EQ(serial, run_mci(config, 3));
}

TEST(Mci, SeedIsolation) {
  // Repetition r depends only on (seed, r).
  const auto short_run = run_mci({0.125, 128, 10, 7});
  const auto long_run = run_mci({0.125, 128, 25, 7});
  for (std::size_t r = 0; r < short_run.size(); ++r) EXPECT_EQ(short_run[r], long_run[r]);
}

TEST(Properties, Unbiased) {
  constexpr double a = 0.125;
  constexpr std::uint64_t samples = 64;
  constexpr std::uint64_t reps = 100'000;
  const auto estimates = run_mci({a, samples, reps, 11});
  const double bound = 3.0 * std::sqrt(a * (1 - a) / (samples * reps));
  EXPECT_NEAR(mean(estimates), a, bound);
}

TEST(Properties, StandardDeviationMatchesBinomial) {
  constexpr double a = 0.125;
  for (std::uint64_t samples : {1024u, 4096u}) {
    const auto estimates = run_mci({a, samples, 10'000, 13 + samples});
    const double expected = std::sqrt(a * (1 - a) / samples);
    EXPECT_NEAR(population_std(estimates) / expected, 1.0, 0.05) << samples;
  }
}

TEST(Properties, HalfNormalMeanError) {
  constexpr double a = 0.125;
  for (std::uint64_t samples : {1024u, 16384u}) {
    const auto estimates = run_mci({a, samples, 10'000, 17 + samples});
    const double expected = std::sqrt(2 / std::numbers::pi) * std::sqrt(a * (1 - a) / samples) / a;
    EXPECT_NEAR(mean_relative_error(estimates, a) / expected, 1.0, 0.05) << samples;
  }
}

}  // namespace
}  // namespace qaelab
