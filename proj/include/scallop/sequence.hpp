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

#ifndef SCALLOP_SEQUENCE_HPP
#define SCALLOP_SEQUENCE_HPP

/// SFQ pulse bitstreams and their simulated action on a truncated transmon:
/// time-ordered evolution, average gate fidelity against the target rotation,
/// per-level population traces, and the building blocks (symmetric pulse
/// pairs) that sequence search perturbs.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "scallop/propagator.hpp"
#include "scallop/transmon.hpp"

namespace scallop {

/// SFQ clock. Every pulse is emitted on (or withheld from) a rising edge of
/// this clock, so a bitstream advances in steps of one clock period.
struct ClockSpec {
  double clock_frequency_ghz = 25.0;

  double period_ns() const { return 1.0 / clock_frequency_ghz; }
};

/// A pulse program: bits[k] == 1 applies a kick on clock edge k.
struct Bitstream {
  std::vector<std::uint8_t> bits;
  ClockSpec clock;

  int size() const { return static_cast<int>(bits.size()); }

  int popcount() const {
    return static_cast<int>(
        std::accumulate(bits.begin(), bits.end(), std::int64_t{0}));
  }

  double duration_ns() const { return size() * clock.period_ns(); }

  std::string to_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (bits[k]) s[k] = '1';
    }
    return s;
  }

  static Bitstream from_string(const std::string& s, const ClockSpec& clock) {
    Bitstream b;
    b.clock = clock;
    b.bits.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("Bitstream: pattern must contain only 0 and 1");
      }
      b.bits.push_back(c == '1' ? 1 : 0);
    }
    return b;
  }

  friend bool operator==(const Bitstream& a, const Bitstream& b) {
    return a.bits == b.bits;
  }
};

/// Target qubit rotation: a pi/2 rotation about y, taking |0> to
/// (|0> + |1>)/sqrt(2).
inline Eigen::Matrix2cd target_y_half() {
  const double r = std::numbers::sqrt2 / 2.0;
  Eigen::Matrix2cd t;
  t << Complex(r), Complex(-r), Complex(r), Complex(r);
  return t;
}

/// Six cardinal qubit states (x+-, y+-, z+-) embedded in dimension d.
inline std::array<Eigen::VectorXcd, 6> cardinal_states(int d) {
  if (d < 2) throw std::domain_error("cardinal_states: dimension must be >= 2");
  const double r = std::numbers::sqrt2 / 2.0;
  const std::array<std::pair<Complex, Complex>, 6> amps = {{
      {Complex(r), Complex(r)},
      {Complex(r), Complex(-r)},
      {Complex(r), Complex(0.0, r)},
      {Complex(r), Complex(0.0, -r)},
      {Complex(1.0), Complex(0.0)},
      {Complex(0.0), Complex(1.0)},
  }};
  std::array<Eigen::VectorXcd, 6> states;
  for (int a = 0; a < 6; ++a) {
    states[a] = Eigen::VectorXcd::Zero(d);
    states[a](0) = amps[a].first;
    states[a](1) = amps[a].second;
  }
  return states;
}

inline constexpr std::array<const char*, 6> kCardinalLabels = {
    "x+", "x-", "y+", "y-", "z+", "z-"};

namespace detail {

/// Fidelity from the 2x2 qubit block of a gate. Amplitudes are not
/// renormalized, so population leaving the qubit subspace lowers the score.
inline double fidelity_from_block(const Eigen::Matrix2cd& block,
                                  const Eigen::Matrix2cd& target) {
  const double r = std::numbers::sqrt2 / 2.0;
  const std::array<Eigen::Vector2cd, 6> states = {{
      {Complex(r), Complex(r)},
      {Complex(r), Complex(-r)},
      {Complex(r), Complex(0.0, r)},
      {Complex(r), Complex(0.0, -r)},
      {Complex(1.0), Complex(0.0)},
      {Complex(0.0), Complex(1.0)},
  }};
  double sum = 0.0;
  for (const auto& a : states) {
    const Eigen::Vector2cd actual = block * a;
    const Eigen::Vector2cd wanted = target * a;
    sum += std::norm(actual.dot(wanted));
  }
  return sum / 6.0;
}

}  // namespace detail

/// Average gate fidelity of a d-dimensional gate against a 2x2 qubit target,
/// estimated over the six cardinal states. Leakage out of the qubit subspace
/// is penalized because overlaps are taken without renormalization.
inline double average_gate_fidelity(const Unitary& u,
                                    const Eigen::Matrix2cd& target) {
  if (u.rows() < 2 || u.rows() != u.cols()) {
    throw std::domain_error("average_gate_fidelity: gate must be square with dim >= 2");
  }
  return detail::fidelity_from_block(u.topLeftCorner<2, 2>(), target);
}

/// Time-ordered propagator of one pass through the bitstream: on each clock
/// edge, the kick (if the bit is set) acts first, then free evolution for one
/// clock period. Earlier edges act first, so
/// evolve(a ++ b) == evolve(b) * evolve(a).
inline Unitary evolve(const Bitstream& seq, const LevelModel& model,
                      double tip_angle) {
  const int d = model.dimension();
  const Unitary kick = sfq_kick(model, tip_angle);
  const Unitary step = free_evolution(model, seq.clock.period_ns());
  Unitary u = Unitary::Identity(d, d);
  for (std::uint8_t b : seq.bits) {
    if (b) u = kick * u;
    u = step * u;
  }
  return u;
}

/// Repeated-subsequence gate evaluator tuned for sequence search, where one
/// bitstream is scored at many tip angles. The kick-generator eigensystem and
/// free-evolution phases are computed once; each fidelity call then runs the
/// clock-edge product in a fixed-size matrix kernel for dimensions up to 8
/// (the dynamic path covers larger models).
class SequenceEvaluator {
 public:
  SequenceEvaluator(Bitstream seq, const LevelModel& model, int repetitions)
      : seq_(std::move(seq)),
        repetitions_(repetitions),
        dim_(model.dimension()),
        target_(target_y_half()) {
    if (repetitions_ < 1) {
      throw std::domain_error("SequenceEvaluator: repetitions must be >= 1");
    }
    if (seq_.size() == 0) {
      throw std::domain_error("SequenceEvaluator: empty bitstream");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kick_generator(model));
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("SequenceEvaluator: eigensolver failed");
    }
    spectrum_ = es.eigenvalues();
    basis_ = es.eigenvectors();
    free_diag_.resize(dim_);
    const double tc = seq_.clock.period_ns();
    for (int g = 0; g < dim_; ++g) {
      free_diag_(g) = std::polar(1.0, -model.energies[g] * tc);
    }
  }

  /// Full gate: `repetitions` passes through the bitstream.
  Unitary gate(double tip_angle) const {
    switch (dim_) {
      case 2: return gate_impl<2>(tip_angle);
      case 3: return gate_impl<3>(tip_angle);
      case 4: return gate_impl<4>(tip_angle);
      case 5: return gate_impl<5>(tip_angle);
      case 6: return gate_impl<6>(tip_angle);
      case 7: return gate_impl<7>(tip_angle);
      case 8: return gate_impl<8>(tip_angle);
      default: return gate_impl<Eigen::Dynamic>(tip_angle);
    }
  }

  Eigen::Matrix2cd qubit_block(double tip_angle) const {
    return gate(tip_angle).topLeftCorner<2, 2>();
  }

  /// Average gate fidelity of the full gate against the y pi/2 target.
  double fidelity(double tip_angle) const {
    switch (dim_) {
      case 2: return detail::fidelity_from_block(block_impl<2>(tip_angle), target_);
      case 3: return detail::fidelity_from_block(block_impl<3>(tip_angle), target_);
      case 4: return detail::fidelity_from_block(block_impl<4>(tip_angle), target_);
      case 5: return detail::fidelity_from_block(block_impl<5>(tip_angle), target_);
      case 6: return detail::fidelity_from_block(block_impl<6>(tip_angle), target_);
      case 7: return detail::fidelity_from_block(block_impl<7>(tip_angle), target_);
      case 8: return detail::fidelity_from_block(block_impl<8>(tip_angle), target_);
      default:
        return detail::fidelity_from_block(
            Eigen::Matrix2cd(gate_impl<Eigen::Dynamic>(tip_angle).topLeftCorner<2, 2>()),
            target_);
    }
  }

  const Bitstream& bits() const { return seq_; }
  int repetitions() const { return repetitions_; }
  int dimension() const { return dim_; }
  double gate_time_ns() const {
    return repetitions_ * seq_.duration_ns();
  }

 private:
  template <int D>
  Eigen::Matrix<Complex, D, D> gate_impl(double tip_angle) const {
    using Mat = Eigen::Matrix<Complex, D, D>;
    using Vec = Eigen::Matrix<Complex, D, 1>;
    const Mat basis = basis_;
    Vec kick_diag(dim_);
    for (int k = 0; k < dim_; ++k) {
      kick_diag(k) = std::polar(1.0, -0.5 * tip_angle * spectrum_(k));
    }
    const Vec free_diag = free_diag_;
    Mat kick_then_step(dim_, dim_);
    kick_then_step.noalias() = basis * kick_diag.asDiagonal() * basis.adjoint();
    kick_then_step.array().colwise() *= free_diag.array();

    Mat sub = Mat::Identity(dim_, dim_);
    Mat tmp(dim_, dim_);
    for (std::uint8_t b : seq_.bits) {
      if (b) {
        tmp.noalias() = kick_then_step * sub;
        sub.swap(tmp);
      } else {
        sub.array().colwise() *= free_diag.array();
      }
    }
    Mat result = sub;
    for (int r = 1; r < repetitions_; ++r) {
      tmp.noalias() = sub * result;
      result.swap(tmp);
    }
    return result;
  }

  template <int D>
  Eigen::Matrix2cd block_impl(double tip_angle) const {
    return gate_impl<D>(tip_angle).template topLeftCorner<2, 2>();
  }

  Bitstream seq_;
  int repetitions_;
  int dim_;
  Eigen::Matrix2cd target_;
  Eigen::VectorXd spectrum_;
  Eigen::MatrixXcd basis_;
  Eigen::VectorXcd free_diag_;
};

/// Propagator of the symmetric pulse pair (m, phi): two kicks mirror-placed
/// about the midpoint of an m half-period window of the qubit, at qubit
/// phases phi and 2 m pi - phi. To first order the pair rotates the qubit by
/// 2 cos(phi) * tip_angle about y while its leakage amplitudes interfere.
/// Kick times are built from exact phases, not rounded to any clock.
inline Unitary symmetric_pair_unitary(int half_periods, double phi,
                                      const LevelModel& model,
                                      double tip_angle) {
  if (half_periods < 1) {
    throw std::domain_error("symmetric_pair_unitary: half_periods must be >= 1");
  }
  const double pi = std::numbers::pi;
  if (!(phi >= 0.0) || !(phi <= 2.0 * half_periods * pi)) {
    throw std::domain_error("symmetric_pair_unitary: phi outside [0, 2 m pi]");
  }
  const double wq = model.energies[1];
  const double outer = phi / wq;
  const double inner = (2.0 * half_periods * pi - 2.0 * phi) / wq;
  const Unitary kick = sfq_kick(model, tip_angle);
  return free_evolution(model, outer) * kick * free_evolution(model, inner) *
         kick * free_evolution(model, outer);
}

/// First-order interference factor of the two leakage amplitudes of a
/// symmetric pair (m, phi). The pair's net 1 -> 2 amplitude is proportional
/// to lambda * |mu| * tip_angle; |mu| = 0 marks pairs whose leakage cancels.
inline Complex first_order_leakage_mu(int half_periods, double phi,
                                      double qubit_frequency_ghz,
                                      double anharmonicity_ghz) {
  const double pi = std::numbers::pi;
  const double eta = anharmonicity_ghz / qubit_frequency_ghz;
  const double phase = half_periods * pi * (3.0 - eta);
  const double envelope = std::cos((1.0 - eta) * (half_periods * pi - phi));
  return Complex(std::cos(phase), std::sin(phase)) * envelope;
}

/// Level populations along a gate, resolved per clock edge and per cardinal
/// initial state, plus the end-of-gate fidelity summary.
struct GateReport {
  double fidelity = 0.0;
  double tip_angle = 0.0;
  int repetitions = 1;
  int subsequence_bits = 0;
  int levels = 0;
  double gate_time_ns = 0.0;
  Eigen::Matrix2cd qubit_block;
  /// times_ns[j] is the time after j clock edges; row j of each population
  /// matrix is sampled there. times_ns[0] == 0 is the initial state.
  std::vector<double> times_ns;
  /// populations[a](j, l): population of level l after j edges, starting from
  /// cardinal state a (ordering matches kCardinalLabels).
  std::array<Eigen::MatrixXd, 6> populations;

  /// Population trace averaged over the six initial states.
  Eigen::MatrixXd average_population() const {
    Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(populations[0].rows(),
                                                populations[0].cols());
    for (const auto& p : populations) avg += p;
    return avg / 6.0;
  }

  /// Largest population of `level` across all samples and initial states.
  double peak_population(int level) const {
    double peak = 0.0;
    for (const auto& p : populations) {
      peak = std::max(peak, p.col(level).maxCoeff());
    }
    return peak;
  }

  /// Largest population of `level` at subsequence boundaries (after each full
  /// pass through the bitstream).
  double boundary_population(int level) const {
    const int edges_per_pass = subsequence_bits;
    double peak = 0.0;
    for (const auto& p : populations) {
      for (int r = 1; r <= repetitions; ++r) {
        peak = std::max(peak, p(r * edges_per_pass, level));
      }
    }
    return peak;
  }
};

/// Simulates the repeated bitstream on each cardinal initial state and
/// records level populations after every clock edge.
inline GateReport leakage_trace(const Bitstream& seq, const LevelModel& model,
                                int repetitions, double tip_angle) {
  if (repetitions < 1) {
    throw std::domain_error("leakage_trace: repetitions must be >= 1");
  }
  const int d = model.dimension();
  const int edges = seq.size() * repetitions;
  const Unitary kick = sfq_kick(model, tip_angle);
  const Unitary step = free_evolution(model, seq.clock.period_ns());
  const auto states = cardinal_states(d);

  GateReport report;
  report.tip_angle = tip_angle;
  report.repetitions = repetitions;
  report.subsequence_bits = seq.size();
  report.levels = d;
  report.gate_time_ns = edges * seq.clock.period_ns();
  report.times_ns.resize(edges + 1);
  for (int j = 0; j <= edges; ++j) {
    report.times_ns[j] = j * seq.clock.period_ns();
  }
  for (int a = 0; a < 6; ++a) {
    report.populations[a].resize(edges + 1, d);
    Eigen::VectorXcd psi = states[a];
    report.populations[a].row(0) = psi.cwiseAbs2().transpose();
    int j = 0;
    for (int r = 0; r < repetitions; ++r) {
      for (int k = 0; k < seq.size(); ++k) {
        if (seq.bits[k]) psi = kick * psi;
        psi = step * psi;
        ++j;
        report.populations[a].row(j) = psi.cwiseAbs2().transpose();
      }
    }
  }

  SequenceEvaluator eval(seq, model, repetitions);
  report.fidelity = eval.fidelity(tip_angle);
  report.qubit_block = eval.qubit_block(tip_angle);
  return report;
}

}  // namespace scallop

#endif  // SCALLOP_SEQUENCE_HPP
