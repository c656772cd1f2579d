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

#ifndef SCALLOP_FREQUENCY_GRID_HPP
#define SCALLOP_FREQUENCY_GRID_HPP

/// The commensurate frequency grid. A qubit at frequency f_q is "magic" for
/// an SFQ clock f_c when N_q qubit periods fit exactly into N_c clock periods;
/// pulse patterns of length N_c then repeat in a fixed phase relation to the
/// qubit, and phase bookkeeping reduces to integer arithmetic mod N_c.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "scallop/sequence.hpp"

namespace scallop {

/// One commensurate point: N_q qubit cycles per N_c clock cycles.
/// Enumeration emits only reduced pairs (gcd == 1); derived subsequence
/// frames may carry a common factor to describe longer patterns at the same
/// frequency.
struct GridPoint {
  int qubit_cycles = 0;
  int clock_cycles = 0;
  double qubit_frequency_ghz = 0.0;
  /// Duration of one pass through an N_c-edge pattern, ns.
  double gate_time_ns = 0.0;

  static GridPoint from_cycles(int qubit_cycles, int clock_cycles,
                               const ClockSpec& clock) {
    if (qubit_cycles < 1 || clock_cycles < 1) {
      throw std::domain_error("GridPoint: cycle counts must be positive");
    }
    GridPoint p;
    p.qubit_cycles = qubit_cycles;
    p.clock_cycles = clock_cycles;
    p.qubit_frequency_ghz = clock.clock_frequency_ghz *
                            static_cast<double>(qubit_cycles) /
                            static_cast<double>(clock_cycles);
    p.gate_time_ns = clock_cycles * clock.period_ns();
    return p;
  }

  double clock_period_ns() const { return gate_time_ns / clock_cycles; }

  ClockSpec clock() const { return ClockSpec{clock_cycles / gate_time_ns}; }
};

/// Same frequency, `factor` times the pattern length.
inline GridPoint scale_frame(const GridPoint& p, int factor) {
  if (factor < 1) {
    throw std::domain_error("scale_frame: factor must be positive");
  }
  GridPoint s = p;
  s.qubit_cycles = p.qubit_cycles * factor;
  s.clock_cycles = p.clock_cycles * factor;
  s.gate_time_ns = p.gate_time_ns * factor;
  return s;
}

/// Largest factor that places clock_cycles * factor inside
/// [min_clocks, max_clocks], or 0 if no factor does.
inline int frame_scale_for_window(int clock_cycles, int min_clocks,
                                  int max_clocks) {
  if (clock_cycles < 1 || min_clocks < 1 || max_clocks < min_clocks) {
    throw std::domain_error("frame_scale_for_window: bad window");
  }
  const int hi = max_clocks / clock_cycles;
  if (hi >= 1 && hi * clock_cycles >= min_clocks) return hi;
  return 0;
}

/// All magic frequencies of the clock inside [f_min_ghz, f_max_ghz]
/// (inclusive) with at most max_clock_cycles clock periods per qubit-phase
/// repeat. Only reduced pairs are emitted, so every frequency appears once,
/// at its shortest pattern length. Sorted by frequency ascending.
inline std::vector<GridPoint> enumerate_magic_frequencies(
    const ClockSpec& clock, double f_min_ghz, double f_max_ghz,
    int max_clock_cycles) {
  if (!(f_min_ghz > 0.0) || !(f_max_ghz >= f_min_ghz)) {
    throw std::domain_error("enumerate_magic_frequencies: bad frequency range");
  }
  if (max_clock_cycles < 1) {
    throw std::domain_error("enumerate_magic_frequencies: bad cycle bound");
  }
  std::vector<GridPoint> points;
  const double fc = clock.clock_frequency_ghz;
  for (int nc = 1; nc <= max_clock_cycles; ++nc) {
    const int lo = static_cast<int>(std::ceil(f_min_ghz * nc / fc - 1e-9));
    const int hi = static_cast<int>(std::floor(f_max_ghz * nc / fc + 1e-9));
    for (int nq = std::max(lo, 1); nq <= hi; ++nq) {
      if (std::gcd(nq, nc) != 1) continue;
      points.push_back(GridPoint::from_cycles(nq, nc, clock));
    }
  }
  std::sort(points.begin(), points.end(),
            [](const GridPoint& a, const GridPoint& b) {
              return static_cast<std::int64_t>(a.qubit_cycles) * b.clock_cycles <
                     static_cast<std::int64_t>(b.qubit_cycles) * a.clock_cycles;
            });
  return points;
}

namespace detail {

/// Violation as an exact fraction over clock_cycles: the numerator of the
/// distance from frac(n_i N_q / N_c) + frac(n_j N_q / N_c) to the nearest
/// integer. A pair mirrors exactly when its two kicks sit at qubit phases phi
/// and 2 m pi - phi for integer m, which is precisely when
/// (n_i + n_j) N_q / N_c is an integer, so the violation is that quantity's
/// distance to the integer lattice. Fractional parts summing to 1 (opposite
/// sides of a qubit-cycle boundary) and summing to 0 or 2 (both edges near a
/// boundary, mirroring about it) all qualify.
inline std::int64_t symmetry_violation_numerator(int edge_a, int edge_b,
                                                 int clock_cycles,
                                                 int qubit_cycles) {
  const std::int64_t nc = clock_cycles;
  const std::int64_t nq = qubit_cycles;
  const std::int64_t s =
      (static_cast<std::int64_t>(edge_a) * nq +
       static_cast<std::int64_t>(edge_b) * nq) % nc;
  return std::min(s, nc - s);
}

}  // namespace detail

/// Deviation of clock edges (n_i, n_j) from perfect phase mirror symmetry:
/// zero when the kick phases at the two edges are exact negatives mod 2 pi
/// (boundary-straddling and boundary-centered pairs alike), at most 1/2.
/// Always an exact multiple of 1/N_c.
inline double symmetry_violation(int edge_a, int edge_b, int clock_cycles,
                                 int qubit_cycles) {
  if (clock_cycles < 1 || qubit_cycles < 1) {
    throw std::domain_error("symmetry_violation: cycle counts must be positive");
  }
  if (edge_a < 0 || edge_b < 0 || edge_a >= clock_cycles ||
      edge_b >= clock_cycles) {
    throw std::out_of_range("symmetry_violation: edge index outside pattern");
  }
  return static_cast<double>(detail::symmetry_violation_numerator(
             edge_a, edge_b, clock_cycles, qubit_cycles)) /
         clock_cycles;
}

/// A pair of clock edges whose kick phases (nearly) mirror each other, so
/// their first-order qubit rotations add while their leakage amplitudes can
/// cancel. edge_a == edge_b marks a self-mirrored single edge. phase and
/// half_period_index identify the ideal continuous-time pair the clocked one
/// approximates.
struct ClockPair {
  int edge_a = 0;
  int edge_b = 0;
  double a_sym = 0.0;
  /// Unreduced kick phase of the earlier edge, 2 pi n_i N_q / N_c, so that
  /// phase / omega_q reproduces the edge time n_i T_c exactly.
  double phase = 0.0;
  /// Qubit half-periods spanned by the pair midpoint,
  /// round((n_i + n_j) N_q / N_c).
  int half_period_index = 0;
};

/// All edge pairs 0 <= n_i <= n_j < N_c with symmetry violation strictly
/// below the threshold, ordered lexicographically. The threshold compare is
/// exact: the violation is v/N_c for integer v, and the threshold is read as
/// a rational with denominator 1e9.
inline std::vector<ClockPair> enumerate_symmetric_pairs(int clock_cycles,
                                                        int qubit_cycles,
                                                        double threshold) {
  if (clock_cycles < 1 || qubit_cycles < 1) {
    throw std::domain_error("enumerate_symmetric_pairs: cycle counts must be positive");
  }
  if (!(threshold > 0.0) || !(threshold <= 0.5)) {
    throw std::domain_error("enumerate_symmetric_pairs: threshold outside (0, 0.5]");
  }
  const std::int64_t thr_num =
      static_cast<std::int64_t>(std::llround(threshold * 1e9));
  std::vector<ClockPair> pairs;
  for (int a = 0; a < clock_cycles; ++a) {
    for (int b = a; b < clock_cycles; ++b) {
      const std::int64_t v = detail::symmetry_violation_numerator(
          a, b, clock_cycles, qubit_cycles);
      if (v * 1000000000LL < thr_num * clock_cycles) {
        ClockPair p;
        p.edge_a = a;
        p.edge_b = b;
        p.a_sym = static_cast<double>(v) / clock_cycles;
        p.phase = kTwoPi *
                  static_cast<double>(static_cast<std::int64_t>(a) *
                                      qubit_cycles) /
                  clock_cycles;
        p.half_period_index = static_cast<int>(
            (2LL * (a + b) * qubit_cycles + clock_cycles) / (2LL * clock_cycles));
        pairs.push_back(p);
      }
    }
  }
  return pairs;
}

}  // namespace scallop

#endif  // SCALLOP_FREQUENCY_GRID_HPP
