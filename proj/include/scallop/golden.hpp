// Copyright 2026 The SCALLOP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCALLOP_GOLDEN_HPP
#define SCALLOP_GOLDEN_HPP

/// One-dimensional scalar optimization helpers used by tip-angle tuning.

#include <cmath>
#include <stdexcept>

namespace scallop {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section minimization of f over [lo, hi]. Stops once the bracket is
/// narrower than x_tol. Assumes f is unimodal on the bracket; on a
/// multi-modal bracket it still converges, to one local minimum.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi,
                                      double x_tol) {
  if (!(hi > lo) || !(x_tol > 0.0)) {
    throw std::domain_error("golden_section_minimize: bad bracket");
  }
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > x_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};
}

/// Bisection for f(x) == target on [lo, hi]; f(lo) and f(hi) must straddle
/// the target. Returns the bracket midpoint once the bracket is narrower
/// than x_tol.
template <class F>
double bisect_to_target(F&& f, double lo, double hi, double target,
                        double x_tol) {
  if (!(hi > lo) || !(x_tol > 0.0)) {
    throw std::domain_error("bisect_to_target: bad bracket");
  }
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::domain_error("bisect_to_target: target not bracketed");
  }
  while (hi - lo > x_tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid) - target;
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace scallop

#endif  // SCALLOP_GOLDEN_HPP
