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

#include <cmath>
#include <utility>

namespace qaelab {

/// Golden-section search for a maximum of a unimodal f on [lo, hi]. Stops once
/// the bracket is narrower than tolerance and returns its midpoint.
template <typename Real, typename F>
Real golden_section_maximize(F&& f, Real lo, Real hi, Real tolerance) {
  const Real inv_phi = (std::sqrt(Real(5)) - Real(1)) / Real(2);
  if (hi < lo) std::swap(lo, hi);
  Real c = hi - inv_phi * (hi - lo);
  Real d = lo + inv_phi * (hi - lo);
  Real fc = f(c);
  Real fd = f(d);
  while (hi - lo > tolerance) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return (lo + hi) / Real(2);
}

}  // namespace qaelab
