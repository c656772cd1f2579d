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

#ifndef SCALLOP_TRANSMON_HPP
#define SCALLOP_TRANSMON_HPP

/// Truncated transmon level models.
///
/// Unit conventions used across the library:
///   - linear frequencies in GHz (1 GHz = 1 cycle/ns),
///   - times in ns,
///   - level energies as angular frequencies in rad/ns,
///   - charge matrix elements in units of 2e (Cooper pairs).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace scallop {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Parameters of a Duffing-ladder approximation to a transmon.
struct TransmonSpec {
  /// 0 -> 1 transition frequency in GHz.
  double qubit_frequency_ghz = 5.0;
  /// Anharmonicity alpha in GHz, defined so the 1 -> 2 transition sits at
  /// qubit_frequency_ghz - anharmonicity_ghz. Positive for a transmon.
  double anharmonicity_ghz = 0.250;
  /// Number of retained levels (>= 2).
  int levels = 3;
  /// Optional override of the charge-coupling ratios
  /// <n+1|Q|n> / <1|Q|0> for n = 1 .. levels-2. Empty selects the harmonic
  /// ladder sqrt(n+1).
  std::vector<double> ladder_ratios;

  double fractional_anharmonicity() const {
    return anharmonicity_ghz / qubit_frequency_ghz;
  }
};

/// Diagonal-plus-ladder description of the truncated transmon: level energies
/// and the nearest-neighbor charge couplings that an SFQ pulse drives.
struct LevelModel {
  /// Level energies as angular frequencies in rad/ns, shifted so
  /// energies[0] == 0. Size is the model dimension.
  std::vector<double> energies;
  /// charge_couplings[n] = <n+1|Q|n> / <1|Q|0>, so charge_couplings[0] == 1.
  /// Size is dimension - 1.
  std::vector<double> charge_couplings;

  int dimension() const { return static_cast<int>(energies.size()); }

  double qubit_frequency_ghz() const { return energies[1] / kTwoPi; }

  /// Angular frequency of the gamma -> gamma+1 transition, rad/ns.
  double transition_angular(int gamma) const {
    return energies[gamma + 1] - energies[gamma];
  }

  /// Ratio of the 1 -> 2 to the 0 -> 1 charge coupling. Requires >= 3 levels.
  double second_coupling_ratio() const {
    if (dimension() < 3) {
      throw std::domain_error("second_coupling_ratio: model has fewer than 3 levels");
    }
    return charge_couplings[1];
  }
};

inline void validate(const TransmonSpec& spec) {
  if (!(spec.qubit_frequency_ghz > 0.0)) {
    throw std::domain_error("TransmonSpec: qubit frequency must be positive");
  }
  if (!(spec.anharmonicity_ghz >= 0.0)) {
    throw std::domain_error("TransmonSpec: anharmonicity must be non-negative");
  }
  if (spec.levels < 2) {
    throw std::domain_error("TransmonSpec: at least two levels required");
  }
  if (!spec.ladder_ratios.empty() &&
      spec.ladder_ratios.size() != static_cast<std::size_t>(spec.levels - 2)) {
    throw std::domain_error(
        "TransmonSpec: ladder_ratios must have levels - 2 entries or be empty");
  }
  for (double r : spec.ladder_ratios) {
    if (!(r > 0.0)) {
      throw std::domain_error("TransmonSpec: ladder ratios must be positive");
    }
  }
}

/// Builds the Duffing ladder E_n = n w_q - n(n-1)/2 alpha (angular units)
/// with harmonic couplings sqrt(n+1) unless the spec overrides the ratios.
inline LevelModel build_duffing_ladder(const TransmonSpec& spec) {
  validate(spec);
  LevelModel model;
  model.energies.resize(spec.levels);
  model.charge_couplings.resize(spec.levels - 1);
  const double wq = kTwoPi * spec.qubit_frequency_ghz;
  const double wa = kTwoPi * spec.anharmonicity_ghz;
  for (int n = 0; n < spec.levels; ++n) {
    model.energies[n] = n * wq - 0.5 * n * (n - 1) * wa;
  }
  for (int n = 0; n + 1 < spec.levels; ++n) {
    if (n == 0) {
      model.charge_couplings[n] = 1.0;
    } else if (spec.ladder_ratios.empty()) {
      model.charge_couplings[n] = std::sqrt(static_cast<double>(n + 1));
    } else {
      model.charge_couplings[n] = spec.ladder_ratios[n - 1];
    }
  }
  return model;
}

/// Diagonalizes the transmon Hamiltonian H = 4 E_C n^2 - (E_J/2) sum(|n+1><n| + h.c.)
/// in the charge basis n = -charge_cutoff .. charge_cutoff at zero offset
/// charge, and truncates to the lowest `levels` eigenstates.
///
/// ej_ghz and ec_ghz are E_J/h and E_C/h. The eigenbasis gauge is fixed so
/// every nearest-neighbor charge element <k+1|n|k> is positive; that makes the
/// returned coupling ratios positive and the truncation reproducible.
///
/// Convergence is checked by re-solving with charge_cutoff + 5: if any
/// retained level moves by more than 1e-10 (relative), the cutoff is deemed
/// too small and a std::runtime_error is thrown.
///
/// If charge_element_01 is non-null it receives |<1|n|0>| in units of 2e,
/// the absolute scale that the normalized couplings divide out.
inline LevelModel diagonalize_charge_basis(double ej_ghz, double ec_ghz,
                                           int charge_cutoff, int levels,
                                           double* charge_element_01 = nullptr) {
  if (!(ej_ghz > 0.0) || !(ec_ghz > 0.0)) {
    throw std::domain_error("diagonalize_charge_basis: E_J and E_C must be positive");
  }
  if (levels < 2) {
    throw std::domain_error("diagonalize_charge_basis: at least two levels required");
  }
  if (charge_cutoff < levels) {
    throw std::domain_error("diagonalize_charge_basis: cutoff smaller than level count");
  }

  struct Solved {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    Eigen::VectorXd charge;
  };
  const auto solve = [&](int cutoff) {
    const int dim = 2 * cutoff + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd charge(dim);
    for (int i = 0; i < dim; ++i) {
      const double n = i - cutoff;
      charge(i) = n;
      h(i, i) = 4.0 * ec_ghz * n * n;
      if (i + 1 < dim) {
        h(i, i + 1) = -0.5 * ej_ghz;
        h(i + 1, i) = -0.5 * ej_ghz;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("diagonalize_charge_basis: eigensolver failed");
    }
    return Solved{es.eigenvalues(), es.eigenvectors(), charge};
  };

  const Solved coarse = solve(charge_cutoff);
  const Solved fine = solve(charge_cutoff + 5);
  for (int k = 0; k < levels; ++k) {
    const double a = coarse.values(k);
    const double b = fine.values(k);
    const double rel = std::abs(a - b) / std::max(std::abs(b), 1.0);
    if (rel > 1e-10) {
      throw std::runtime_error(
          "diagonalize_charge_basis: spectrum not converged at cutoff " +
          std::to_string(charge_cutoff) + ", level " + std::to_string(k));
    }
  }

  // Work in the finer basis; it is at least as accurate and already solved.
  Eigen::MatrixXd vecs = fine.vectors.leftCols(levels);
  for (int k = 0; k + 1 < levels; ++k) {
    const double elem =
        vecs.col(k).dot(fine.charge.cwiseProduct(vecs.col(k + 1)).matrix());
    if (elem < 0.0) {
      vecs.col(k + 1) *= -1.0;
    }
  }

  LevelModel model;
  model.energies.resize(levels);
  model.charge_couplings.resize(levels - 1);
  for (int k = 0; k < levels; ++k) {
    model.energies[k] = kTwoPi * (fine.values(k) - fine.values(0));
  }
  const double q01 =
      vecs.col(0).dot(fine.charge.cwiseProduct(vecs.col(1)).matrix());
  for (int k = 0; k + 1 < levels; ++k) {
    const double q =
        vecs.col(k).dot(fine.charge.cwiseProduct(vecs.col(k + 1)).matrix());
    model.charge_couplings[k] = q / q01;
  }
  if (charge_element_01 != nullptr) {
    *charge_element_01 = q01;
  }
  return model;
}

/// Capacitive link between the SFQ driver and the transmon island.
struct CouplingSpec {
  /// Coupling capacitance C_c in aF.
  double coupling_capacitance_af = 0.0;
  /// Qubit self-capacitance C in fF.
  double self_capacitance_ff = 0.0;
  /// Charge matrix element <1|Q|0> in units of 2e.
  double charge_element_01 = 0.0;
};

/// Tip angle per SFQ pulse for a capacitively coupled driver:
/// dtheta = 4 pi (C_c / (C + C_c)) <1|Q|0>, with the flux quantum folded in.
/// Valid pulses tip by a small angle; anything outside (0, pi) is rejected.
inline double tip_angle_from_coupling(const CouplingSpec& coupling) {
  if (!(coupling.coupling_capacitance_af > 0.0)) {
    throw std::domain_error("tip_angle_from_coupling: coupling capacitance must be positive");
  }
  if (!(coupling.self_capacitance_ff > 0.0)) {
    throw std::domain_error("tip_angle_from_coupling: self capacitance must be positive");
  }
  if (!(coupling.charge_element_01 > 0.0)) {
    throw std::domain_error("tip_angle_from_coupling: charge element must be positive");
  }
  const double total_af =
      coupling.coupling_capacitance_af + 1e3 * coupling.self_capacitance_ff;
  const double angle = 2.0 * kTwoPi *
                       (coupling.coupling_capacitance_af / total_af) *
                       coupling.charge_element_01;
  if (!(angle > 0.0) || !(angle < std::numbers::pi)) {
    throw std::domain_error("tip_angle_from_coupling: tip angle outside (0, pi)");
  }
  return angle;
}

}  // namespace scallop

#endif  // SCALLOP_TRANSMON_HPP
