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

#include "qaelab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qaelab {

namespace {

void check_qubits(int qubits) {
  if (qubits < 1 || qubits > kMaxDomainQubits) {
    throw std::invalid_argument("domain qubit count must be in [1, " +
                                std::to_string(kMaxDomainQubits) + "], got " +
                                std::to_string(qubits));
  }
}

}  // namespace

OracleSpec::OracleSpec(int qubits, std::uint64_t good_count) : OracleSpec(qubits, good_count, {}) {}

OracleSpec::OracleSpec(int qubits, std::uint64_t good_count, std::vector<std::uint64_t> good_set)
    : qubits_(qubits), good_count_(good_count), good_set_(std::move(good_set)) {
  check_qubits(qubits);
  if (good_count_ > domain_size()) {
    throw std::invalid_argument("good count " + std::to_string(good_count_) +
                                " exceeds domain size " + std::to_string(domain_size()));
  }
}

OracleSpec OracleSpec::with_good_set(int qubits, std::vector<std::uint64_t> good_set) {
  check_qubits(qubits);
  std::sort(good_set.begin(), good_set.end());
  if (std::adjacent_find(good_set.begin(), good_set.end()) != good_set.end()) {
    throw std::invalid_argument("good set contains duplicate indices");
  }
  const std::uint64_t size = std::uint64_t{1} << qubits;
  if (!good_set.empty() && good_set.back() >= size) {
    throw std::invalid_argument("good set index " + std::to_string(good_set.back()) +
                                " outside domain of size " + std::to_string(size));
  }
  const auto count = static_cast<std::uint64_t>(good_set.size());
  // An empty explicit set is indistinguishable from the K = 0 prefix.
  return OracleSpec(qubits, count, std::move(good_set));
}

bool OracleSpec::is_good(std::uint64_t domain_index) const {
  if (good_set_.empty()) {
    return domain_index < good_count_;
  }
  return std::binary_search(good_set_.begin(), good_set_.end(), domain_index);
}

double OracleSpec::amplitude() const {
  return std::ldexp(static_cast<double>(good_count_), -qubits_);
}

double OracleSpec::theta() const { return theta_from_amplitude(amplitude()); }

OracleSpec oracle_from_amplitude(int qubits, double a) {
  check_qubits(qubits);
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("amplitude must lie in [0, 1]");
  }
  const double scaled = std::ldexp(a, qubits);
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9) {
    throw std::invalid_argument("a * 2^n = " + std::to_string(scaled) +
                                " is not an integral good-state count");
  }
  return OracleSpec(qubits, static_cast<std::uint64_t>(rounded));
}

double theta_from_amplitude(double a) { return std::asin(std::sqrt(std::clamp(a, 0.0, 1.0))); }

double analytic_flag_probability(double theta, std::uint64_t m) {
  const double s = std::sin(static_cast<double>(2 * m + 1) * theta);
  return s * s;
}

double analytic_flag_probability(const OracleSpec& oracle, std::uint64_t m) {
  return analytic_flag_probability(oracle.theta(), m);
}

}  // namespace qaelab
