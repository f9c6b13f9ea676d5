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
 * Matrix-free amplitude-amplification engine.
 *
 * A state on n domain qubits plus one flag qubit is a dense Eigen column of
 * 2^(n+1) complex amplitudes. Basis index i encodes (domain d, flag f) as
 * i = (d << 1) | f, so the flag is the least significant bit.
 *
 * All operators act in place on any Eigen dense expression with complex
 * scalar, so callers can pass a StateVector, a Map over foreign storage, or a
 * column of a matrix when probing the operator densely.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "qaelab/oracle.hpp"

namespace qaelab {

/// Statevectors above this size are refused (2^27 amplitudes, 2 GiB at double).
inline constexpr int kMaxStatevectorQubits = 26;

template <typename Scalar>
using StateVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using StateVectorXd = StateVector<double>;

constexpr std::uint64_t basis_index(std::uint64_t domain_index, unsigned flag) {
  return (domain_index << 1) | (flag & 1u);
}

namespace detail {

template <typename Derived>
void check_dimension(const Eigen::MatrixBase<Derived>& state, const OracleSpec& oracle) {
  const auto expected = static_cast<Eigen::Index>(std::uint64_t{2} << oracle.qubits());
  if (state.size() != expected) {
    throw std::invalid_argument("state has " + std::to_string(state.size()) +
                                " amplitudes, oracle needs " + std::to_string(expected));
  }
}

inline void check_simulable(const OracleSpec& oracle) {
  if (oracle.qubits() > kMaxStatevectorQubits) {
    throw std::invalid_argument("statevector simulation limited to " +
                                std::to_string(kMaxStatevectorQubits) + " domain qubits");
  }
}

}  // namespace detail

/// H on every domain qubit, identity on the flag. Self-inverse.
template <typename Derived>
void apply_domain_hadamard(Eigen::MatrixBase<Derived>& state) {
  using Complex = typename Derived::Scalar;
  using Real = typename Complex::value_type;
  const Real inv_sqrt2 = Real(1) / std::sqrt(Real(2));
  const Eigen::Index size = state.size();
  // Domain bit b lives at index bit b + 1.
  for (Eigen::Index stride = 2; stride < size; stride <<= 1) {
    for (Eigen::Index block = 0; block < size; block += 2 * stride) {
      for (Eigen::Index i = block; i < block + stride; ++i) {
        const Complex u = state(i);
        const Complex v = state(i + stride);
        state(i) = (u + v) * inv_sqrt2;
        state(i + stride) = (u - v) * inv_sqrt2;
      }
    }
  }
}

/// X on the flag qubit controlled by "domain index is good". Self-inverse.
template <typename Derived>
void apply_mark(Eigen::MatrixBase<Derived>& state, const OracleSpec& oracle) {
  detail::check_dimension(state, oracle);
  auto swap_flag = [&state](std::uint64_t d) {
    const auto lo = static_cast<Eigen::Index>(basis_index(d, 0));
    std::swap(state(lo), state(lo + 1));
  };
  if (oracle.explicit_good_set().empty()) {
    for (std::uint64_t d = 0; d < oracle.good_count(); ++d) swap_flag(d);
  } else {
    for (std::uint64_t d : oracle.explicit_good_set()) swap_flag(d);
  }
}

/// State preparation A = mark * (H^n (x) I).
template <typename Derived>
void apply_a(Eigen::MatrixBase<Derived>& state, const OracleSpec& oracle) {
  detail::check_dimension(state, oracle);
  apply_domain_hadamard(state);
  apply_mark(state, oracle);
}

/// A^-1 = (H^n (x) I) * mark, the adjoint of apply_a.
template <typename Derived>
void apply_a_inverse(Eigen::MatrixBase<Derived>& state, const OracleSpec& oracle) {
  detail::check_dimension(state, oracle);
  apply_mark(state, oracle);
  apply_domain_hadamard(state);
}

/// A|0>: amplitude 2^(-n/2) on (d, flag = [d good]).
template <typename Scalar = double>
StateVector<Scalar> prepare_a(const OracleSpec& oracle) {
  detail::check_simulable(oracle);
  StateVector<Scalar> state = StateVector<Scalar>::Zero(
      static_cast<Eigen::Index>(std::uint64_t{2} << oracle.qubits()));
  const Scalar amp = Scalar(1) / std::sqrt(static_cast<Scalar>(oracle.domain_size()));
  for (std::uint64_t d = 0; d < oracle.domain_size(); ++d) {
    state(static_cast<Eigen::Index>(basis_index(d, oracle.is_good(d) ? 1u : 0u))) = amp;
  }
  return state;
}

/// S_chi = I^n (x) Z: negate every flag-1 amplitude.
template <typename Derived>
void apply_s_chi(Eigen::MatrixBase<Derived>& state) {
  for (Eigen::Index i = 1; i < state.size(); i += 2) state(i) = -state(i);
}

/// S_0 = I - 2|0><0| over all n + 1 qubits.
template <typename Derived>
void apply_s_0(Eigen::MatrixBase<Derived>& state) {
  if (state.size() > 0) state(0) = -state(0);
}

/// Q = A S_0 A^-1 S_chi; S_chi acts first.
template <typename Derived>
void apply_q(Eigen::MatrixBase<Derived>& state, const OracleSpec& oracle) {
  detail::check_dimension(state, oracle);
  apply_s_chi(state);
  apply_a_inverse(state, oracle);
  apply_s_0(state);
  apply_a(state, oracle);
}

/// Q^m by repeated application; m = 0 leaves the state untouched.
template <typename Derived>
void apply_q_power(Eigen::MatrixBase<Derived>& state, const OracleSpec& oracle, std::uint64_t m) {
  for (std::uint64_t i = 0; i < m; ++i) apply_q(state, oracle);
}

/// Marginal probability of measuring the flag qubit as 1.
template <typename Derived>
auto flag_probability(const Eigen::MatrixBase<Derived>& state) {
  using Real = typename Derived::Scalar::value_type;
  Real p(0);
  for (Eigen::Index i = 1; i < state.size(); i += 2) p += std::norm(state(i));
  return p;
}

/// Flag-1 probability of Q^m A|0>, by full simulation.
template <typename Scalar = double>
Scalar simulated_flag_probability(const OracleSpec& oracle, std::uint64_t m) {
  StateVector<Scalar> state = prepare_a<Scalar>(oracle);
  apply_q_power(state, oracle, m);
  return flag_probability(state);
}

}  // namespace qaelab
