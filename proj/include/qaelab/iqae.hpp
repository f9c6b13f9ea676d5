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
 * Iterative amplitude estimation.
 *
 * A confidence interval [theta_lo, theta_hi] is narrowed round by round. Each
 * round picks the largest Q-power k for which the scaled interval
 * (4k + 2) [theta_lo, theta_hi] sits inside one half-plane ([0, pi] or
 * [pi, 2pi] modulo 2pi). There cos is monotone, so a confidence interval on
 * the measured probability sin^2((2k + 1) theta) = (1 - cos((4k + 2) theta)) / 2
 * maps back to an interval on theta.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qaelab/backend.hpp"
#include "qaelab/oracle.hpp"

namespace qaelab {

struct ConfidenceInterval {
  double theta_lo = 0.0;
  double theta_hi = 0.0;

  double width() const { return theta_hi - theta_lo; }
  double midpoint() const { return 0.5 * (theta_lo + theta_hi); }
};

/// Intersection of two intervals. When they are disjoint the result collapses
/// onto the endpoint of `current` nearest to `update`, so it stays inside
/// `current`.
ConfidenceInterval intersect(const ConfidenceInterval& current, const ConfidenceInterval& update);

/// Which half-plane contains (4k + 2) [theta_lo, theta_hi] mod 2pi, if any.
/// Returns 1 for the upper half-plane, -1 for the lower, 0 for neither (the
/// scaled interval straddles pi or 2pi, or is wider than pi).
int half_plane(const ConfidenceInterval& ci, std::uint64_t k);

struct NextPower {
  std::uint64_t k = 0;
  bool upper_half_plane = true;
};

/// Largest k whose scaled interval lies in a half-plane. The power only moves
/// when it can grow to at least ratio * k_current; otherwise k_current is kept.
NextPower find_next_k(const ConfidenceInterval& ci, std::uint64_t k_current, std::uint64_t ratio = 2);

struct ProbabilityInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Two-sided Clopper-Pearson interval at level 1 - alpha.
ProbabilityInterval binomial_confidence(std::uint64_t hits, std::uint64_t shots, double alpha);

/// Maps a probability interval on sin^2((2k+1) theta) back to theta, given the
/// half-plane and the winding number w of the scaled interval.
ConfidenceInterval invert_to_theta(const ProbabilityInterval& p, std::uint64_t k,
                                   bool upper_half_plane, std::int64_t winding);

struct RoundRecord {
  std::uint64_t k = 0;
  bool upper_half_plane = true;
  std::uint64_t new_shots = 0;  ///< shots drawn in this round
  std::uint64_t shots = 0;      ///< shots pooled at this k so far
  std::uint64_t hits = 0;       ///< hits pooled at this k so far
  ConfidenceInterval interval_before;
  ConfidenceInterval interval_after;
};

struct IqaeOptions {
  double epsilon = 0.01;
  double alpha = 0.05;
  std::uint64_t shots_per_round = 1024;
  std::uint64_t ratio = 2;
};

struct IqaeReport {
  double a_hat = 0.0;
  double a_lo = 0.0;
  double a_hi = 1.0;
  std::uint64_t oracle_calls = 0;
  std::vector<RoundRecord> rounds;
  double epsilon = 0.0;
  double alpha = 0.0;
  ConfidenceInterval interval;
};

/// Union-bound round budget ceil(log2(pi / (8 epsilon))) + 1.
std::uint64_t max_rounds(double epsilon);

/// Round cap after which run_iqae gives up.
std::uint64_t iteration_cap(double epsilon);

class IterationCapError : public std::runtime_error {
 public:
  explicit IterationCapError(IqaeReport report);
  const IqaeReport& report() const { return report_; }

 private:
  IqaeReport report_;
};

/// Runs rounds until sin^2(theta_hi) - sin^2(theta_lo) <= 2 epsilon. Shots at
/// a repeated k are pooled; each round's confidence level is
/// alpha / max_rounds(epsilon). Throws IterationCapError after
/// iteration_cap(epsilon) rounds, std::invalid_argument on bad options.
IqaeReport run_iqae(const OracleSpec& oracle, const IqaeOptions& options, Backend backend,
                    std::uint64_t seed);

}  // namespace qaelab
