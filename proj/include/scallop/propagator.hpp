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

#ifndef SCALLOP_PROPAGATOR_HPP
#define SCALLOP_PROPAGATOR_HPP

/// Elementary propagators: free phase evolution between clock edges and the
/// delta-kick unitary applied by one SFQ pulse.

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "scallop/transmon.hpp"

namespace scallop {

using Complex = std::complex<double>;
using Unitary = Eigen::MatrixXcd;

inline bool is_unitary(const Unitary& u, double tol = 1e-12) {
  if (u.rows() != u.cols()) return false;
  const Unitary residual =
      u.adjoint() * u - Unitary::Identity(u.rows(), u.cols());
  return residual.cwiseAbs().maxCoeff() <= tol;
}

/// Free evolution for time t_ns in the rotating-lab frame where level gamma
/// accrues phase exp(-i E_gamma t).
inline Unitary free_evolution(const LevelModel& model, double t_ns) {
  const int d = model.dimension();
  Unitary u = Unitary::Zero(d, d);
  for (int g = 0; g < d; ++g) {
    u(g, g) = std::polar(1.0, -model.energies[g] * t_ns);
  }
  return u;
}

/// Hermitian generator of the SFQ kick: the multi-level analogue of sigma_y
/// with ladder weights from the model couplings, so a kick of tip angle
/// dtheta is exp(-i dtheta/2 * generator).
inline Eigen::MatrixXcd kick_generator(const LevelModel& model) {
  const int d = model.dimension();
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n + 1 < d; ++n) {
    g(n + 1, n) = Complex(0.0, model.charge_couplings[n]);
    g(n, n + 1) = Complex(0.0, -model.charge_couplings[n]);
  }
  return g;
}

/// Evaluates SFQ kicks at many tip angles from one spectral decomposition of
/// the kick generator. The generator is fixed by the model; only the angle
/// varies along a pulse-sequence search, so the eigensystem is cached.
class KickOperator {
 public:
  explicit KickOperator(const LevelModel& model) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kick_generator(model));
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("KickOperator: eigensolver failed");
    }
    phases_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
  }

  Unitary operator()(double tip_angle) const {
    const int d = static_cast<int>(phases_.size());
    Eigen::VectorXcd diag(d);
    for (int k = 0; k < d; ++k) {
      diag(k) = std::polar(1.0, -0.5 * tip_angle * phases_(k));
    }
    return vectors_ * diag.asDiagonal() * vectors_.adjoint();
  }

  const Eigen::VectorXd& generator_spectrum() const { return phases_; }
  const Eigen::MatrixXcd& generator_basis() const { return vectors_; }

 private:
  Eigen::VectorXd phases_;
  Eigen::MatrixXcd vectors_;
};

/// Single SFQ kick exp(-i dtheta/2 * generator) for the given model.
inline Unitary sfq_kick(const LevelModel& model, double tip_angle) {
  return KickOperator(model)(tip_angle);
}

/// Closed form of the 3-level kick with coupling ratio lambda. With
/// kappa = sqrt(1 + lambda^2), the generator cubes back onto itself,
/// so the exponential truncates after the quadratic term:
///   exp(t A) = I + sin(kappa t)/kappa A + (1 - cos(kappa t))/kappa^2 A^2,
/// where A is the real antisymmetric form of the generator and
/// t = tip_angle / 2. All entries are real.
inline Eigen::Matrix3cd closed_form_kick_3(double tip_angle, double lambda) {
  const double k2 = 1.0 + lambda * lambda;
  const double kappa = std::sqrt(k2);
  const double c = std::cos(0.5 * kappa * tip_angle);
  const double s = std::sin(0.5 * kappa * tip_angle);
  Eigen::Matrix3cd u;
  u << (lambda * lambda + c) / k2, -s / kappa, lambda * (1.0 - c) / k2,
       s / kappa,                   c,         -lambda * s / kappa,
       lambda * (1.0 - c) / k2,     lambda * s / kappa, (1.0 + lambda * lambda * c) / k2;
  return u;
}

}  // namespace scallop

#endif  // SCALLOP_PROPAGATOR_HPP
