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

#include "qaelab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "qaelab/amplification.hpp"
#include "qaelab/iqae.hpp"

namespace qaelab {

namespace {

std::string describe(double worst, double tolerance) {
  std::ostringstream s;
  s.precision(3);
  s << "max deviation " << worst << " (tolerance " << tolerance << ")";
  return s.str();
}

CheckResult check_unitarity() {
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const auto dim = static_cast<Eigen::Index>(2) << n;
    for (std::uint64_t k = 0; k <= (std::uint64_t{1} << n); ++k) {
      const OracleSpec oracle(n, k);
      Eigen::MatrixXcd q(dim, dim);
      for (Eigen::Index j = 0; j < dim; ++j) {
        StateVectorXd probe = StateVectorXd::Unit(dim, j);
        apply_q(probe, oracle);
        q.col(j) = probe;
      }
      const Eigen::MatrixXcd gram = q * q.adjoint();
      worst = std::max(worst, (gram - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff());
    }
  }
  return {"Q unitarity (n <= 4, all K)", worst < kTol, describe(worst, kTol)};
}

CheckResult check_rotation_identity() {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t k = 0; k <= (std::uint64_t{1} << n); ++k) {
      const OracleSpec oracle(n, k);
      StateVectorXd state = prepare_a(oracle);
      for (std::uint64_t m = 0; m <= 8; ++m) {
        if (m > 0) apply_q(state, oracle);
        worst = std::max(worst, std::abs(flag_probability(state) - analytic_flag_probability(oracle, m)));
      }
    }
  }
  return {"rotation identity (n <= 6, all K, m <= 8)", worst < kTol, describe(worst, kTol)};
}

CheckResult check_involutions() {
  constexpr double kTol = 1e-12;
  constexpr double kNormTol = 1e-10;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  double worst_norm = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const auto dim = static_cast<Eigen::Index>(2) << n;
    StateVectorXd state(dim);
    for (Eigen::Index i = 0; i < dim; ++i) state(i) = {normal(rng), normal(rng)};
    state.normalize();
    StateVectorXd copy = state;
    apply_s_chi(copy);
    apply_s_chi(copy);
    worst = std::max(worst, (copy - state).cwiseAbs().maxCoeff());
    apply_s_0(copy);
    apply_s_0(copy);
    worst = std::max(worst, (copy - state).cwiseAbs().maxCoeff());
    const OracleSpec oracle(n, (std::uint64_t{1} << n) / 3);
    apply_q_power(copy, oracle, 5);
    worst_norm = std::max(worst_norm, std::abs(copy.squaredNorm() - 1.0));
  }
  return {"S_chi, S_0 involutions and normalization", worst < kTol && worst_norm < kNormTol,
          describe(worst, kTol) + "; norm drift " + describe(worst_norm, kNormTol)};
}

double binomial_tail_at_least(std::uint64_t hits, std::uint64_t shots, double p) {
  double total = 0.0;
  for (std::uint64_t j = hits; j <= shots; ++j) {
    const double log_pmf = std::lgamma(shots + 1.0) - std::lgamma(j + 1.0) - std::lgamma(shots - j + 1.0) +
                           j * std::log(p) + (shots - j) * std::log1p(-p);
    total += std::exp(log_pmf);
  }
  return total;
}

CheckResult check_clopper_pearson() {
  constexpr double kTol = 1e-9;
  constexpr double kAlpha = 0.05;
  double worst = 0.0;
  for (std::uint64_t shots : {1u, 10u, 16u, 100u, 1024u}) {
    for (std::uint64_t hits : {std::uint64_t{1}, shots / 3, shots / 2, shots - 1}) {
      if (hits == 0 || hits >= shots) continue;
      const ProbabilityInterval p = binomial_confidence(hits, shots, kAlpha);
      worst = std::max(worst, std::abs(binomial_tail_at_least(hits, shots, p.lo) - kAlpha / 2));
      worst = std::max(worst, std::abs(1.0 - binomial_tail_at_least(hits + 1, shots, p.hi) - kAlpha / 2));
    }
  }
  return {"Clopper-Pearson bounds vs Binomial tail sums", worst < kTol, describe(worst, kTol)};
}

CheckResult check_half_plane_search() {
  constexpr double kPi = std::numbers::pi;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int mismatches = 0;
  constexpr int kTrials = 2000;
  for (int t = 0; t < kTrials; ++t) {
    // Strictly interior: at theta_hi = pi/2 the scaled endpoint sits exactly on
    // a half-plane boundary and the comparison is decided by rounding.
    const double width = 0.5 * std::pow(10.0, -3.0 * unit(rng));
    const double lo = unit(rng) * (kPi / 2 - 2 * width);
    const ConfidenceInterval ci{lo, lo + width};
    std::uint64_t best = 0;
    const auto limit = static_cast<std::uint64_t>(kPi / (4.0 * ci.width())) + 1;
    for (std::uint64_t k = 0; k <= limit; ++k) {
      const double scale = 4.0 * static_cast<double>(k) + 2.0;
      const double a = scale * ci.theta_lo;
      const double b = scale * ci.theta_hi;
      const double turns = std::floor(a / (2 * kPi));
      const double l = a - turns * 2 * kPi;
      const double u = b - turns * 2 * kPi;
      if (b - a <= kPi && (u <= kPi || (l >= kPi && u <= 2 * kPi))) best = k;
    }
    if (find_next_k(ci, 0, 2).k != best) ++mismatches;
  }
  return {"half-plane power search vs exhaustive scan", mismatches == 0,
          std::to_string(mismatches) + " mismatches in " + std::to_string(kTrials) + " intervals"};
}

}  // namespace

std::vector<CheckResult> run_verification() {
  return {check_unitarity(), check_rotation_identity(), check_involutions(), check_clopper_pearson(),
          check_half_plane_search()};
}

}  // namespace qaelab
