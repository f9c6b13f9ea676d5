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
#include <span>
#include <vector>

namespace qaelab {

/// Largest domain register accepted by OracleSpec. Statevector simulation has
/// its own, much smaller, limit (see kMaxStatevectorQubits).
inline constexpr int kMaxDomainQubits = 62;

/// Problem definition for amplitude estimation: a domain of 2^n basis states
/// of which `good_count` are marked good.
///
/// The good set defaults to the prefix {0, ..., K-1}. Flag-measurement
/// statistics depend only on K, so the prefix is as good as any other choice;
/// an explicit set is accepted for gate-level comparisons.
class OracleSpec {
 public:
  /// Throws std::invalid_argument if qubits is out of [1, kMaxDomainQubits]
  /// or good_count exceeds 2^qubits.
  OracleSpec(int qubits, std::uint64_t good_count);

  /// Duplicates are rejected, as are indices outside the domain.
  static OracleSpec with_good_set(int qubits, std::vector<std::uint64_t> good_set);

  int qubits() const { return qubits_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << qubits_; }
  std::uint64_t good_count() const { return good_count_; }

  bool is_good(std::uint64_t domain_index) const;

  /// Explicit good set, sorted ascending. Empty when the default prefix is used.
  std::span<const std::uint64_t> explicit_good_set() const { return good_set_; }

  /// a = K / 2^n.
  double amplitude() const;

  /// theta in [0, pi/2] with sin^2(theta) = a.
  double theta() const;

 private:
  OracleSpec(int qubits, std::uint64_t good_count, std::vector<std::uint64_t> good_set);

  int qubits_;
  std::uint64_t good_count_;
  std::vector<std::uint64_t> good_set_;
};

/// Builds the prefix oracle with K = round(a * 2^n). Throws
/// std::invalid_argument unless a * 2^n is integral within 1e-9.
OracleSpec oracle_from_amplitude(int qubits, double a);

/// arcsin(sqrt(a)) with a clamped to [0, 1].
double theta_from_amplitude(double a);

/// sin^2((2m+1) theta), the flag-1 probability after m amplification steps.
double analytic_flag_probability(double theta, std::uint64_t m);
double analytic_flag_probability(const OracleSpec& oracle, std::uint64_t m);

}  // namespace qaelab
