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

#ifndef SCALLOP_SEARCH_HPP
#define SCALLOP_SEARCH_HPP

/// Search over pulse bitstreams on one grid point. Vertices are bit patterns
/// scored by their best-achievable gate fidelity; edges toggle a symmetric
/// pair of clock edges, which preserves the first-order leakage cancellation
/// of the pattern while shifting its rotation rate. Starting from the basic
/// (phase-majority) pattern, a greedy climb finds a high-fidelity entry point
/// and a breadth-first sweep maps the surrounding region above a fidelity
/// floor.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "scallop/frequency_grid.hpp"
#include "scallop/golden.hpp"
#include "scallop/sequence.hpp"

namespace scallop {

/// Infidelity bound that defines a vertex's usable tip-angle band.
inline constexpr double kBandInfidelity = 1e-4;

/// The phase-majority pattern: kick on every clock edge whose kick phase lies
/// within a quarter turn of zero, so every kick adds a positive qubit
/// rotation. The boundary (phase exactly +-pi/2) is kept. The pattern is
/// palindromic around edge 0.
inline Bitstream basic_subsequence(const GridPoint& grid) {
  Bitstream seq;
  seq.clock = grid.clock();
  seq.bits.resize(grid.clock_cycles);
  const std::int64_t nq = grid.qubit_cycles;
  const std::int64_t nc = grid.clock_cycles;
  for (std::int64_t k = 0; k < nc; ++k) {
    const std::int64_t r = (k * nq) % nc;
    seq.bits[k] = (4 * r <= nc || 4 * r >= 3 * nc) ? 1 : 0;
  }
  return seq;
}

/// First-order tip-angle estimate for a pattern: the angle at which the
/// per-pass rotations, projected on the qubit y axis and summed over set
/// bits, accumulate to pi/2 after `repetitions` passes. The projection of
/// edge k is cos(2 pi frac(k N_q / N_c)).
///
/// Returns 0 when the pattern has no positive net rotation (no meaningful
/// seed exists).
inline double first_order_tip_seed(const Bitstream& seq, const GridPoint& grid,
                                   int repetitions) {
  if (seq.size() != grid.clock_cycles) {
    throw std::invalid_argument("first_order_tip_seed: pattern length mismatch");
  }
  double projected = 0.0;
  for (int k = 0; k < seq.size(); ++k) {
    if (!seq.bits[k]) continue;
    const std::int64_t r =
        (static_cast<std::int64_t>(k) * grid.qubit_cycles) % grid.clock_cycles;
    projected += std::cos(kTwoPi * static_cast<double>(r) / grid.clock_cycles);
  }
  if (!(projected > 0.0)) return 0.0;
  const double seed = std::numbers::pi / (2.0 * repetitions * projected);
  return seed;
}

struct TipAngleResult {
  double tip_angle = 0.0;
  double fidelity = 0.0;
  /// Set when the fidelity does not depend on the angle (no kicks in the
  /// pattern); tip_angle is then the seed, returned unchanged.
  bool degenerate = false;
};

/// Best tip angle for a pattern near a seed estimate: a 61-point scan of
/// [0.5, 1.5] times the seed picks the coarse optimum, then golden-section
/// refinement between its scan neighbors narrows the angle to 1e-6 rad.
/// The seed must lie in (0, 0.1], the per-pulse range SFQ hardware reaches.
inline TipAngleResult optimize_tip_angle(const Bitstream& seq,
                                         const GridPoint& grid,
                                         const LevelModel& model,
                                         int repetitions, double seed_angle) {
  if (!(seed_angle > 0.0 && seed_angle <= 0.1)) {
    throw std::domain_error("optimize_tip_angle: seed outside (0, 0.1]");
  }
  if (seq.size() != grid.clock_cycles) {
    throw std::invalid_argument("optimize_tip_angle: pattern length mismatch");
  }
  const SequenceEvaluator eval(seq, model, repetitions);
  if (seq.popcount() == 0) {
    return TipAngleResult{seed_angle, eval.fidelity(seed_angle), true};
  }
  constexpr int kScanPoints = 61;
  int best = 0;
  double best_fidelity = -1.0;
  std::array<double, kScanPoints> angles;
  for (int i = 0; i < kScanPoints; ++i) {
    angles[i] = seed_angle * (0.5 + static_cast<double>(i) / (kScanPoints - 1));
    const double f = eval.fidelity(angles[i]);
    if (f > best_fidelity) {
      best_fidelity = f;
      best = i;
    }
  }
  const double lo = angles[std::max(best - 1, 0)];
  const double hi = angles[std::min(best + 1, kScanPoints - 1)];
  const auto infidelity = [&](double t) { return 1.0 - eval.fidelity(t); };
  const ScalarMinimum min = golden_section_minimize(infidelity, lo, hi, 1e-6);
  TipAngleResult result;
  if (1.0 - min.value >= best_fidelity) {
    result.tip_angle = min.x;
    result.fidelity = 1.0 - min.value;
  } else {
    result.tip_angle = angles[best];
    result.fidelity = best_fidelity;
  }
  return result;
}

/// Tip-angle interval around tip_opt inside which the gate infidelity stays
/// below kBandInfidelity. Requires infidelity(tip_opt) < kBandInfidelity.
/// Edges are located to 1e-7 rad by bisection after an expanding march
/// brackets each crossing.
inline std::pair<double, double> fidelity_band(const SequenceEvaluator& eval,
                                               double tip_opt) {
  const auto infidelity = [&](double t) { return 1.0 - eval.fidelity(t); };
  if (!(infidelity(tip_opt) < kBandInfidelity)) {
    throw std::domain_error("fidelity_band: tip_opt not inside the band");
  }
  const auto edge = [&](double direction) {
    double step = std::max(1e-4, 0.02 * tip_opt);
    double good = tip_opt;
    for (int it = 0; it < 60; ++it) {
      double probe = good + direction * step;
      if (probe <= 0.0) probe = 0.5 * good;
      if (infidelity(probe) >= kBandInfidelity) {
        if (direction < 0.0) {
          return bisect_to_target(infidelity, probe, good, kBandInfidelity, 1e-7);
        }
        return bisect_to_target(infidelity, good, probe, kBandInfidelity, 1e-7);
      }
      good = probe;
      step *= 2.0;
    }
    return good;
  };
  return {edge(-1.0), edge(+1.0)};
}

/// A scored point of the pattern graph.
struct Vertex {
  Bitstream bits;
  GridPoint grid;
  int repetitions = 1;
  double tip_angle_opt = 0.0;
  double fidelity_opt = 0.0;
  /// Tip-angle band with infidelity below kBandInfidelity; empty (hi < lo)
  /// when the optimum itself does not reach the band threshold.
  double band_lo = 0.0;
  double band_hi = -1.0;

  bool has_band() const { return band_hi >= band_lo; }

  bool band_contains(double angle) const {
    return has_band() && angle >= band_lo && angle <= band_hi;
  }
};

/// Scores a pattern with its own first-order seed and, when the optimum
/// clears the band threshold, locates the tip-angle band. Patterns with no
/// usable seed (no net positive rotation, or a seed beyond the 0.1 rad
/// hardware range) keep fidelity_opt == 0 and are thereby pruned by any
/// fidelity floor.
inline Vertex evaluate_vertex(Bitstream seq, const GridPoint& grid,
                              const LevelModel& model, int repetitions) {
  Vertex v;
  v.grid = grid;
  v.repetitions = repetitions;
  const double seed = first_order_tip_seed(seq, grid, repetitions);
  v.bits = std::move(seq);
  if (!(seed > 0.0) || seed > 0.1) return v;
  const TipAngleResult opt =
      optimize_tip_angle(v.bits, grid, model, repetitions, seed);
  v.tip_angle_opt = opt.tip_angle;
  v.fidelity_opt = opt.fidelity;
  if (1.0 - opt.fidelity < kBandInfidelity) {
    const SequenceEvaluator eval(v.bits, model, repetitions);
    const auto band = fidelity_band(eval, opt.tip_angle);
    v.band_lo = band.first;
    v.band_hi = band.second;
  }
  return v;
}

/// Patterns one symmetric-pair toggle away. A pair move flips both bits of a
/// pair when they hold equal values; a self-paired edge flips alone. Moves
/// that would flip unequal bits are not graph edges.
inline std::vector<Bitstream> neighbors(const Bitstream& seq,
                                        const std::vector<ClockPair>& pairs) {
  std::vector<Bitstream> out;
  out.reserve(pairs.size());
  for (const ClockPair& p : pairs) {
    if (p.edge_a == p.edge_b) {
      Bitstream n = seq;
      n.bits[p.edge_a] ^= 1;
      out.push_back(std::move(n));
    } else if (seq.bits[p.edge_a] == seq.bits[p.edge_b]) {
      Bitstream n = seq;
      n.bits[p.edge_a] ^= 1;
      n.bits[p.edge_b] ^= 1;
      out.push_back(std::move(n));
    }
  }
  return out;
}

inline std::vector<Bitstream> neighbors(const Vertex& v,
                                        const std::vector<ClockPair>& pairs) {
  return neighbors(v.bits, pairs);
}

namespace detail {

/// Deterministic vertex ordering: higher fidelity wins, then fewer set bits,
/// then the lexicographically smaller pattern.
inline bool better_scored(double fidelity_a, const Bitstream& a,
                          double fidelity_b, const Bitstream& b) {
  if (fidelity_a != fidelity_b) return fidelity_a > fidelity_b;
  const int pa = a.popcount();
  const int pb = b.popcount();
  if (pa != pb) return pa < pb;
  return a.to_string() < b.to_string();
}

}  // namespace detail

struct ClimbResult {
  Vertex vertex;
  /// Best fidelity after each climb step; front() is the seed's score, so
  /// the path length is size() - 1.
  std::vector<double> path_fidelities;
  std::size_t evaluations = 0;
};

/// Steepest-ascent walk from a seed pattern: each step moves to the
/// highest-scoring neighbor until no neighbor strictly improves on the
/// current pattern. Neighbor ties fall back to fewer set bits, then the
/// lexicographically smaller pattern.
inline ClimbResult greedy_climb(const Bitstream& seed, const GridPoint& grid,
                                const LevelModel& model, int repetitions,
                                double pair_threshold = 0.05) {
  const std::vector<ClockPair> pairs = enumerate_symmetric_pairs(
      grid.clock_cycles, grid.qubit_cycles, pair_threshold);
  ClimbResult result;
  Vertex current = evaluate_vertex(seed, grid, model, repetitions);
  result.evaluations = 1;
  result.path_fidelities.push_back(current.fidelity_opt);
  for (;;) {
    bool found = false;
    Bitstream best_bits;
    double best_fidelity = 0.0;
    for (Bitstream& nb : neighbors(current.bits, pairs)) {
      const double nb_seed = first_order_tip_seed(nb, grid, repetitions);
      if (!(nb_seed > 0.0) || nb_seed > 0.1) continue;
      const TipAngleResult r =
          optimize_tip_angle(nb, grid, model, repetitions, nb_seed);
      ++result.evaluations;
      if (!found || detail::better_scored(r.fidelity, nb, best_fidelity, best_bits)) {
        found = true;
        best_fidelity = r.fidelity;
        best_bits = std::move(nb);
      }
    }
    if (!found || best_fidelity <= current.fidelity_opt) break;
    current = evaluate_vertex(std::move(best_bits), grid, model, repetitions);
    result.path_fidelities.push_back(current.fidelity_opt);
  }
  result.vertex = std::move(current);
  return result;
}

struct Neighborhood {
  /// Vertices above the fidelity floor, in breadth-first discovery order;
  /// front() is the entry vertex.
  std::vector<Vertex> vertices;
  /// Distinct patterns scored, including rejected ones.
  std::size_t evaluated = 0;
  bool budget_exhausted = false;
  double fidelity_floor = 0.0;
};

/// Breadth-first sweep of the connected region of patterns whose optimal
/// fidelity stays at or above `fidelity_floor`, starting from an entry
/// vertex. Patterns below the floor are recorded as visited but not
/// expanded. Stops once `vertex_budget` distinct patterns have been scored.
inline Neighborhood neighborhood_bfs(const Vertex& entry, const GridPoint& grid,
                                     const LevelModel& model, int repetitions,
                                     double fidelity_floor,
                                     std::size_t vertex_budget,
                                     double pair_threshold = 0.05) {
  Neighborhood hood;
  hood.fidelity_floor = fidelity_floor;
  if (entry.fidelity_opt < fidelity_floor) return hood;

  const std::vector<ClockPair> pairs = enumerate_symmetric_pairs(
      grid.clock_cycles, grid.qubit_cycles, pair_threshold);
  std::unordered_set<std::string> visited;
  std::deque<std::size_t> frontier;

  visited.insert(entry.bits.to_string());
  hood.vertices.push_back(entry);
  hood.evaluated = 1;
  frontier.push_back(0);

  while (!frontier.empty() && !hood.budget_exhausted) {
    const std::size_t index = frontier.front();
    frontier.pop_front();
    // vertices may reallocate while expanding, so copy the pattern first
    const Bitstream bits = hood.vertices[index].bits;
    for (Bitstream& nb : neighbors(bits, pairs)) {
      if (!visited.insert(nb.to_string()).second) continue;
      if (hood.evaluated >= vertex_budget) {
        hood.budget_exhausted = true;
        break;
      }
      Vertex v = evaluate_vertex(std::move(nb), grid, model, repetitions);
      ++hood.evaluated;
      if (v.fidelity_opt >= fidelity_floor) {
        hood.vertices.push_back(std::move(v));
        frontier.push_back(hood.vertices.size() - 1);
      }
    }
  }
  return hood;
}

struct Selection {
  Vertex vertex;
  /// Fidelity of the selected pattern at the fixed tip angle, scored in the
  /// model passed to select_for_tip_angle.
  double fidelity = 0.0;
  /// True when even the best pattern misses the band threshold at the fixed
  /// angle.
  bool below_threshold = true;
};

/// Picks the neighborhood vertex that scores best when driven at a fixed,
/// hardware-given tip angle; fidelity is re-evaluated at that angle, not
/// interpolated from bands. Scoring uses the supplied model, which may be a
/// finer level truncation than the one searched with. Ties fall back to
/// fewer set bits, then the lexicographically smaller pattern.
inline Selection select_for_tip_angle(const Neighborhood& hood,
                                      double fixed_angle,
                                      const LevelModel& model) {
  if (hood.vertices.empty()) {
    throw std::invalid_argument("select_for_tip_angle: empty neighborhood");
  }
  Selection sel;
  bool found = false;
  for (const Vertex& v : hood.vertices) {
    const SequenceEvaluator eval(v.bits, model, v.repetitions);
    const double f = eval.fidelity(fixed_angle);
    if (!found ||
        detail::better_scored(f, v.bits, sel.fidelity, sel.vertex.bits)) {
      found = true;
      sel.vertex = v;
      sel.fidelity = f;
    }
  }
  sel.below_threshold = (1.0 - sel.fidelity) >= kBandInfidelity;
  return sel;
}

/// Repetition counts to try for a frame when aiming at a fixed per-pulse tip
/// angle: every R in [1, 20], ordered by how close R passes come to the
/// target gate time; ties prefer the smaller R. The derivation pipeline
/// evaluates the leading candidates and keeps the best result.
inline std::vector<int> choose_repetitions(const GridPoint& frame,
                                           double fixed_angle,
                                           double target_gate_time_ns) {
  if (!(fixed_angle > 0.0 && fixed_angle <= 0.1)) {
    throw std::domain_error("choose_repetitions: fixed angle outside (0, 0.1]");
  }
  if (!(target_gate_time_ns >= 0.0)) {
    throw std::domain_error("choose_repetitions: negative target time");
  }
  std::vector<int> reps(20);
  for (int r = 1; r <= 20; ++r) reps[r - 1] = r;
  std::stable_sort(reps.begin(), reps.end(), [&](int a, int b) {
    const double da = std::abs(a * frame.gate_time_ns - target_gate_time_ns);
    const double db = std::abs(b * frame.gate_time_ns - target_gate_time_ns);
    return da < db;
  });
  return reps;
}

}  // namespace scallop

#endif  // SCALLOP_SEARCH_HPP
