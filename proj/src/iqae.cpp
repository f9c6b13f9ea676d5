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

#include "qaelab/iqae.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/beta.hpp>

namespace qaelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Degenerate intervals would otherwise ask for unbounded powers.
constexpr std::uint64_t kMaxPower = std::uint64_t{1} << 24;

double sin2(double theta) {
  const double s = std::sin(theta);
  return s * s;
}

double scale_of(std::uint64_t k) { return static_cast<double>(4 * k + 2); }

void finalize(IqaeReport& report, const ConfidenceInterval& ci) {
  report.interval = ci;
  report.a_lo = sin2(ci.theta_lo);
  report.a_hi = sin2(ci.theta_hi);
  report.a_hat = sin2(ci.midpoint());
}

}  // namespace

ConfidenceInterval intersect(const ConfidenceInterval& current, const ConfidenceInterval& update) {
  ConfidenceInterval out{std::max(current.theta_lo, update.theta_lo),
                         std::min(current.theta_hi, update.theta_hi)};
  if (out.theta_lo > out.theta_hi) {
    const double edge = update.theta_lo > current.theta_hi ? current.theta_hi : current.theta_lo;
    out = {edge, edge};
  }
  return out;
}

int half_plane(const ConfidenceInterval& ci, std::uint64_t k) {
  const double scale = scale_of(k);
  const double lo = scale * ci.theta_lo;
  const double hi = scale * ci.theta_hi;
  // Absorbs the rounding of theta = phi / scale followed by scale * theta.
  const double tol = 1e-12 * std::max(1.0, hi);
  if (hi - lo > kPi + tol) return 0;
  const double turns = std::floor(lo / kTwoPi);
  const double l = lo - kTwoPi * turns;
  const double u = hi - kTwoPi * turns;
  if (u <= kPi + tol) return 1;
  if (l >= kPi - tol && u <= kTwoPi + tol) return -1;
  return 0;
}

NextPower find_next_k(const ConfidenceInterval& ci, std::uint64_t k_current, std::uint64_t ratio) {
  std::uint64_t k_max = kMaxPower;
  if (ci.width() > 0.0) {
    const double bound = std::floor((kPi / ci.width() - 2.0) / 4.0);
    k_max = bound <= 0.0 ? 0 : static_cast<std::uint64_t>(std::min(bound, static_cast<double>(kMaxPower)));
  }
  const std::uint64_t k_min = k_current >= 1 ? ratio * k_current : 0;

  for (std::uint64_t k = k_max + 1; k-- > k_min;) {
    if (const int side = half_plane(ci, k); side != 0) return {k, side > 0};
  }
  if (const int side = half_plane(ci, k_current); side != 0) return {k_current, side > 0};
  // Only reachable if rounding pushed the nested interval off k_current's
  // half-plane; fall back to the largest smaller power that still fits.
  for (std::uint64_t k = std::min(k_current, k_min); k-- > 0;) {
    if (const int side = half_plane(ci, k); side != 0) return {k, side > 0};
  }
  return {0, true};
}

ProbabilityInterval binomial_confidence(std::uint64_t hits, std::uint64_t shots, double alpha) {
  if (shots == 0) throw std::invalid_argument("binomial_confidence needs shots >= 1");
  if (hits > shots) throw std::invalid_argument("hits exceed shots");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  const auto h = static_cast<double>(hits);
  const auto n = static_cast<double>(shots);
  ProbabilityInterval p;
  p.lo = hits == 0 ? 0.0 : boost::math::ibeta_inv(h, n - h + 1.0, alpha / 2.0);
  p.hi = hits == shots ? 1.0 : boost::math::ibeta_inv(h + 1.0, n - h, 1.0 - alpha / 2.0);
  return p;
}

ConfidenceInterval invert_to_theta(const ProbabilityInterval& p, std::uint64_t k,
                                   bool upper_half_plane, std::int64_t winding) {
  auto angle = [](double prob) { return std::acos(std::clamp(1.0 - 2.0 * prob, -1.0, 1.0)); };
  double phi_lo = 0.0;
  double phi_hi = 0.0;
  if (upper_half_plane) {
    phi_lo = angle(p.lo);
    phi_hi = angle(p.hi);
  } else {
    phi_lo = kTwoPi - angle(p.hi);
    phi_hi = kTwoPi - angle(p.lo);
  }
  const double offset = kTwoPi * static_cast<double>(winding);
  const double scale = scale_of(k);
  return {(phi_lo + offset) / scale, (phi_hi + offset) / scale};
}

std::uint64_t max_rounds(double epsilon) {
  const double rounds = std::ceil(std::log2(kPi / (8.0 * epsilon))) + 1.0;
  return rounds < 1.0 ? 1 : static_cast<std::uint64_t>(rounds);
}

std::uint64_t iteration_cap(double epsilon) { return 10 * max_rounds(epsilon); }

IterationCapError::IterationCapError(IqaeReport report)
    : std::runtime_error("IQAE did not converge within " +
                         std::to_string(report.rounds.size()) + " rounds"),
      report_(std::move(report)) {}

IqaeReport run_iqae(const OracleSpec& oracle, const IqaeOptions& options, Backend backend,
                    std::uint64_t seed) {
  if (!(options.epsilon > 0.0 && options.epsilon < 0.5)) {
    throw std::invalid_argument("epsilon must lie in (0, 0.5)");
  }
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (options.shots_per_round == 0) throw std::invalid_argument("shots must be positive");
  if (options.ratio < 2) throw std::invalid_argument("ratio must be at least 2");

  const double alpha_round = options.alpha / static_cast<double>(max_rounds(options.epsilon));
  const std::uint64_t cap = iteration_cap(options.epsilon);

  FlagSampler sampler(backend, oracle);
  Rng rng(seed);

  IqaeReport report;
  report.epsilon = options.epsilon;
  report.alpha = options.alpha;

  ConfidenceInterval ci{0.0, kPi / 2};
  std::uint64_t k = 0;
  std::uint64_t pooled_shots = 0;
  std::uint64_t pooled_hits = 0;

  while (sin2(ci.theta_hi) - sin2(ci.theta_lo) > 2.0 * options.epsilon) {
    if (report.rounds.size() >= cap) {
      finalize(report, ci);
      throw IterationCapError(std::move(report));
    }
    const NextPower next = find_next_k(ci, k, options.ratio);
    if (next.k != k) {
      pooled_shots = 0;
      pooled_hits = 0;
    }
    k = next.k;
    const double scale = scale_of(k);
    const auto winding = static_cast<std::int64_t>(std::floor(scale * ci.midpoint() / kTwoPi));

    const std::uint64_t hits = sampler.measure(k, options.shots_per_round, rng);
    pooled_shots += options.shots_per_round;
    pooled_hits += hits;
    report.oracle_calls += options.shots_per_round * (2 * k + 1);

    const ProbabilityInterval p = binomial_confidence(pooled_hits, pooled_shots, alpha_round);
    const ConfidenceInterval before = ci;
    ci = intersect(ci, invert_to_theta(p, k, next.upper_half_plane, winding));

    report.rounds.push_back(
        {k, next.upper_half_plane, options.shots_per_round, pooled_shots, pooled_hits, before, ci});
  }
  finalize(report, ci);
  return report;
}

}  // namespace qaelab
