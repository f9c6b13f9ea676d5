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
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qaelab/mlqae.hpp"
#include "qaelab/oracle.hpp"

namespace qaelab {
namespace {

constexpr double kPi = std::numbers::pi;
const double kTheta = std::asin(std::sqrt(0.125));

std::vector<MeasurementRecord> expected_records(const Schedule& schedule, std::uint64_t shots, double theta) {
  std::vector<MeasurementRecord> records;
  for (std::uint64_t m : schedule.powers) {
    const double p = std::pow(std::sin((2.0 * m + 1.0) * theta), 2);
    records.push_back({m, shots, static_cast<std::uint64_t>(std::llround(p * static_cast<double>(shots)))});
  }
  return records;
}

std::vector<testing::Record> to_reference(const std::vector<MeasurementRecord>& records) {
  std::vector<testing::Record> out;
  for (const auto& r : records) out.push_back({r.power, r.shots, r.hits});
  return out;
}

TEST(Schedule, Powers) {
  EXPECT_EQ(eis_schedule(3).powers, (std::vector<std::uint64_t>{0, 1, 2, 4}));
  EXPECT_EQ(eis_schedule(4).powers, (std::vector<std::uint64_t>{0, 1, 2, 4, 8}));
  EXPECT_EQ(eis_schedule(0).powers, (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(lis_schedule(3).powers, (std::vector<std::uint64_t>{0, 1, 2, 3}));
  EXPECT_EQ(make_schedule(ScheduleKind::LIS, 0).powers, (std::vector<std::uint64_t>{0}));
  EXPECT_THROW(eis_schedule(63), std::invalid_argument);
  EXPECT_EQ(parse_schedule_kind("lis"), ScheduleKind::LIS);
  EXPECT_THROW(parse_schedule_kind("quadratic"), std::invalid_argument);
}

TEST(Schedule, PowersAreStrictlyIncreasing) {
  for (std::uint64_t m = 0; m < 20; ++m) {
    for (const auto& s : {eis_schedule(m), lis_schedule(m)}) {
      ASSERT_EQ(s.powers.size(), m + 1);
      EXPECT_EQ(s.powers.front(), 0u);
      for (std::size_t i = 1; i < s.powers.size(); ++i) EXPECT_GT(s.powers[i], s.powers[i - 1]);
    }
  }
}

TEST(OracleCallCount, Examples) {
  EXPECT_EQ(oracle_call_count(eis_schedule(3), 1), 18u);
  EXPECT_EQ(oracle_call_count(eis_schedule(4), 1), 35u);
  EXPECT_EQ(oracle_call_count(eis_schedule(0), 64), 64u);
  EXPECT_EQ(oracle_call_count(lis_schedule(3), 2), 2u * (1 + 3 + 5 + 7));
}

TEST(LogLikelihood, AllHitsAtQuarterTurn) {
  const std::vector<MeasurementRecord> r = {{0, 10, 10}};
  EXPECT_NEAR(log_likelihood(r, kPi / 2), 0.0, 1e-12);
}

TEST(LogLikelihood, NoHitsApproachesZeroFromBelow) {
  const std::vector<MeasurementRecord> r = {{0, 10, 0}};
  double previous = -INFINITY;
  for (double theta : {1e-1, 1e-2, 1e-3, 1e-6}) {
    const double value = log_likelihood(r, theta);
    EXPECT_LT(value, 0.0);
    EXPECT_GT(value, previous);
    previous = value;
  }
  EXPECT_GT(previous, -1e-10);
  EXPECT_EQ(log_likelihood(r, 0.0), 0.0);
}

TEST(LogLikelihood, FiniteAtZeroProbability) {
  const std::vector<MeasurementRecord> r = {{0, 10, 3}};
  EXPECT_TRUE(std::isfinite(log_likelihood(r, 0.0)));
  EXPECT_TRUE(std::isfinite(log_likelihood(r, kPi / 2)));
}

TEST(LogLikelihood, MatchesReferenceFormula) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0.0, kPi / 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<MeasurementRecord> records;
    for (std::uint64_t m : eis_schedule(4).powers) {
      const std::uint64_t shots = 1 + rng() % 200;
      records.push_back({m, shots, rng() % (shots + 1)});
    }
    const double theta = angle(rng);
    const double ref = testing::reference_log_likelihood(to_reference(records), theta);
    EXPECT_NEAR(log_likelihood(records, theta), ref, 1e-9 * std::max(1.0, std::abs(ref)));
  }
}

TEST(LogLikelihood, ExpectedHitsPeakAtTrueAngle) {
  const auto records = expected_records(eis_schedule(3), 1'000'000, kTheta);
  const double grid_best = testing::grid_scan_argmax(to_reference(records), 1'000'000);
  EXPECT_NEAR(grid_best, 0.361367, 1e-4);
  EXPECT_NEAR(maximize_likelihood(records), grid_best, 1e-5);
}

TEST(MaximizeLikelihood, SingleCircuitIsSampleProportion) {
  const std::vector<MeasurementRecord> r = {{0, 1024, 128}};
  EXPECT_NEAR(maximize_likelihood(r), kTheta, 1e-6);
}

TEST(MaximizeLikelihood, NoHitsGivesZero) {
  const std::vector<MeasurementRecord> r = {{0, 16, 0}};
  EXPECT_EQ(maximize_likelihood(r), 0.0);
}

TEST(MaximizeLikelihood, AllHitsGivesQuarterTurn) {
  const std::vector<MeasurementRecord> r = {{0, 16, 16}};
  EXPECT_NEAR(maximize_likelihood(r), kPi / 2, 1e-9);
}

TEST(MaximizeLikelihood, EisDepthFourExpectedHits) {
  const auto records = expected_records(eis_schedule(4), 4096, kTheta);
  const double theta = maximize_likelihood(records);
  EXPECT_NEAR(std::pow(std::sin(theta), 2), 0.125, 1e-4);
  EXPECT_NEAR(theta, testing::grid_scan_argmax(to_reference(records), 1'000'000), 1e-5);
}

TEST(MaximizeLikelihood, RejectsBadRecords) {
  EXPECT_THROW(maximize_likelihood(std::vector<MeasurementRecord>{}), std::invalid_argument);
  const std::vector<MeasurementRecord> r = {{0, 4, 5}};
  EXPECT_THROW(maximize_likelihood(r), std::invalid_argument);
}

// Property: no point of an independent dense grid beats the maximizer.
TEST(Properties, MaximizerDominatesGrid) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<MeasurementRecord> records;
    for (std::uint64_t m : eis_schedule(1 + trial % 4).powers) {
      const std::uint64_t shots = 1 + rng() % 64;
      records.push_back({m, shots, rng() % (shots + 1)});
    }
    const auto ref = to_reference(records);
    const double best = testing::reference_log_likelihood(ref, maximize_likelihood(records));
    for (int i = 0; i <= 20'000; ++i) {
      const double theta = (kPi / 2) * i / 20'000.0;
      ASSERT_LE(testing::reference_log_likelihood(ref, theta), best + 1e-9 * std::max(1.0, std::abs(best)))
          << "trial " << trial << " theta " << theta;
    }
  }
}

// Property: L and log L pick the same grid point. Small shot counts keep the
// plain product of probabilities away from underflow.
TEST(Properties, LikelihoodAndLogLikelihoodAgree) {
  std::mt19937_64 rng(23);
  constexpr int kGrid = 4001;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<MeasurementRecord> records;
    for (std::uint64_t m : eis_schedule(3).powers) {
      const std::uint64_t shots = 1 + rng() % 12;
      records.push_back({m, shots, rng() % (shots + 1)});
    }
    int arg_l = 0, arg_log = 0;
    double best_l = -1.0, best_log = -INFINITY;
    for (int i = 0; i < kGrid; ++i) {
      const double theta = (kPi / 2) * i / (kGrid - 1);
      double l = 1.0;
      for (const auto& r : records) {
        const double p = std::pow(std::sin((2.0 * r.power + 1.0) * theta), 2);
        l *= std::pow(p, static_cast<double>(r.hits)) * std::pow(1.0 - p, static_cast<double>(r.shots - r.hits));
      }
      if (l > best_l) {
        best_l = l;
        arg_l = i;
      }
      const double ll = log_likelihood(records, theta);
      if (ll > best_log) {
        best_log = ll;
        arg_log = i;
      }
    }
    EXPECT_EQ(arg_l, arg_log) << "trial " << trial;
  }
}

TEST(Properties, ConsistencyOnExpectedRecords) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(0.05, kPi / 2 - 0.05);
  for (int trial = 0; trial < 30; ++trial) {
    const double theta = angle(rng);
    for (std::uint64_t depth : {3u, 4u}) {
      const auto records = expected_records(eis_schedule(depth), 10'000, theta);
      EXPECT_NEAR(maximize_likelihood(records), theta, 1e-3) << "depth " << depth;
    }
  }
}

TEST(RunMlqae, OracleCallsPerRepetition) {
  const OracleSpec o(10, 128);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    EXPECT_EQ(run_mlqae(o, 3, 1024, ScheduleKind::EIS, Backend::Analytic, seed).oracle_calls, 18432u);
    EXPECT_EQ(run_mlqae(o, 4, 16, ScheduleKind::EIS, Backend::Analytic, seed).oracle_calls, 560u);
  }
}

TEST(RunMlqae, RecordsFollowSchedule) {
  const auto report = run_mlqae(OracleSpec(10, 128), 4, 100, ScheduleKind::LIS, Backend::Analytic, 1);
  ASSERT_EQ(report.records.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(report.records[i].power, i);
    EXPECT_EQ(report.records[i].shots, 100u);
    EXPECT_LE(report.records[i].hits, 100u);
  }
  EXPECT_EQ(report.oracle_calls, 100u * (1 + 3 + 5 + 7 + 9));
  EXPECT_NEAR(report.log_likelihood_at_max, log_likelihood(report.records, report.theta_hat), 1e-9);
}

TEST(RunMlqae, NoGoodStatesGivesExactZero) {
  for (std::uint64_t m : {0u, 3u, 4u}) {
    for (std::uint64_t shots : {1u, 16u, 1024u}) {
      const auto report = run_mlqae(OracleSpec(10, 0), m, shots, ScheduleKind::EIS, Backend::Analytic, 5);
      EXPECT_EQ(report.a_hat, 0.0);
    }
  }
}

TEST(RunMlqae, Deterministic) {
  const OracleSpec o(10, 128);
  const auto a = run_mlqae(o, 4, 64, ScheduleKind::EIS, Backend::Analytic, 77);
  const auto b = run_mlqae(o, 4, 64, ScheduleKind::EIS, Backend::Analytic, 77);
  EXPECT_EQ(a.theta_hat, b.theta_hat);
  EXPECT_EQ(a.a_hat, b.a_hat);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) EXPECT_EQ(a.records[i].hits, b.records[i].hits);
}

TEST(RunMlqae, StatevectorBackendEstimates) {
  const auto report = run_mlqae(OracleSpec(8, 32), 3, 1024, ScheduleKind::EIS, Backend::Statevector, 4);
  EXPECT_NEAR(report.a_hat, 0.125, 0.01);
}

// Averaged over 30 seeds per depth; the deeper schedule is more accurate.
TEST(Properties, DeeperScheduleIsMoreInformative) {
  const OracleSpec o(10, 128);
  double err3 = 0.0, err4 = 0.0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    err3 += std::abs(run_mlqae(o, 3, 1024, ScheduleKind::EIS, Backend::Analytic, 1000 + seed).a_hat - 0.125);
    err4 += std::abs(run_mlqae(o, 4, 1024, ScheduleKind::EIS, Backend::Analytic, 2000 + seed).a_hat - 0.125);
  }
  EXPECT_LE(err4, err3);
}

}  // namespace
}  // namespace qaelab
