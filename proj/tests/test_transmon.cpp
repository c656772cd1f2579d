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

#include "scallop/transmon.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace scallop {
namespace {

TEST(TransmonSpec, DefaultsDescribeAStandardTransmon) {
  TransmonSpec spec;
  EXPECT_DOUBLE_EQ(spec.qubit_frequency_ghz, 5.0);
  EXPECT_DOUBLE_EQ(spec.anharmonicity_ghz, 0.250);
  EXPECT_EQ(spec.levels, 3);
  EXPECT_TRUE(spec.ladder_ratios.empty());
  EXPECT_DOUBLE_EQ(spec.fractional_anharmonicity(), 0.05);
}

TEST(TransmonSpec, ValidationRejectsBadParameters) {
  TransmonSpec spec;
  spec.qubit_frequency_ghz = 0.0;
  EXPECT_THROW(validate(spec), std::domain_error);

  spec = TransmonSpec{};
  spec.anharmonicity_ghz = -0.1;
  EXPECT_THROW(validate(spec), std::domain_error);

  spec = TransmonSpec{};
  spec.levels = 1;
  EXPECT_THROW(validate(spec), std::domain_error);

  spec = TransmonSpec{};
  spec.levels = 4;
  spec.ladder_ratios = {1.4};
  EXPECT_THROW(validate(spec), std::domain_error);

  spec.ladder_ratios = {1.4, -0.5};
  EXPECT_THROW(validate(spec), std::domain_error);

  spec.ladder_ratios = {1.4, 1.7};
  EXPECT_NO_THROW(validate(spec));
}

TEST(DuffingLadder, EnergiesFollowTheQuadraticFormula) {
  TransmonSpec spec;
  spec.qubit_frequency_ghz = 4.8;
  spec.anharmonicity_ghz = 0.21;
  spec.levels = 7;
  const LevelModel model = build_duffing_ladder(spec);

  ASSERT_EQ(model.dimension(), 7);
  EXPECT_DOUBLE_EQ(model.energies[0], 0.0);
  for (int n = 0; n < 7; ++n) {
    const double expected = kTwoPi * (n * 4.8 - 0.5 * n * (n - 1) * 0.21);
    EXPECT_NEAR(model.energies[n], expected, 1e-12) << "level " << n;
  }
  EXPECT_NEAR(model.qubit_frequency_ghz(), 4.8, 1e-12);
}

TEST(DuffingLadder, TransitionsShrinkByOneAnharmonicityPerStep) {
  TransmonSpec spec;
  spec.levels = 5;
  const LevelModel model = build_duffing_ladder(spec);
  for (int gamma = 0; gamma + 1 < 5; ++gamma) {
    const double expected =
        kTwoPi * (spec.qubit_frequency_ghz - gamma * spec.anharmonicity_ghz);
    EXPECT_NEAR(model.transition_angular(gamma), expected, 1e-12);
  }
}

TEST(DuffingLadder, HarmonicCouplingsAreSquareRoots) {
  TransmonSpec spec;
  spec.levels = 6;
  const LevelModel model = build_duffing_ladder(spec);
  ASSERT_EQ(model.charge_couplings.size(), 5u);
  EXPECT_DOUBLE_EQ(model.charge_couplings[0], 1.0);
  for (int n = 1; n < 5; ++n) {
    EXPECT_NEAR(model.charge_couplings[n], std::sqrt(n + 1.0), 1e-15);
  }
  EXPECT_NEAR(model.second_coupling_ratio(), std::sqrt(2.0), 1e-15);
}

TEST(DuffingLadder, LadderOverrideReplacesUpperCouplingsOnly) {
  TransmonSpec spec;
  spec.levels = 4;
  spec.ladder_ratios = {1.3, 1.9};
  const LevelModel model = build_duffing_ladder(spec);
  EXPECT_DOUBLE_EQ(model.charge_couplings[0], 1.0);
  EXPECT_DOUBLE_EQ(model.charge_couplings[1], 1.3);
  EXPECT_DOUBLE_EQ(model.charge_couplings[2], 1.9);
}

TEST(DuffingLadder, TwoLevelModelHasNoSecondCoupling) {
  TransmonSpec spec;
  spec.levels = 2;
  const LevelModel model = build_duffing_ladder(spec);
  EXPECT_THROW(model.second_coupling_ratio(), std::domain_error);
}

TEST(ChargeBasis, ReproducesTransmonAsymptotics) {
  // Deep transmon regime: f_01 ~ sqrt(8 E_J E_C) - E_C and alpha ~ E_C.
  const double ej = 17.0;
  const double ec = 0.270;
  const LevelModel model = diagonalize_charge_basis(ej, ec, 30, 4);

  const double f01 = model.energies[1] / kTwoPi;
  const double f12 = (model.energies[2] - model.energies[1]) / kTwoPi;
  const double asymptotic_f01 = std::sqrt(8.0 * ej * ec) - ec;
  EXPECT_NEAR(f01, asymptotic_f01, 0.05 * asymptotic_f01);

  const double alpha = f01 - f12;
  EXPECT_GT(alpha, 0.0);
  EXPECT_NEAR(alpha, ec, 0.2 * ec);
}

TEST(ChargeBasis, CouplingRatioApproachesHarmonicValue) {
  // The 1 -> 2 over 0 -> 1 charge ratio tends to sqrt(2) from below as
  // E_J/E_C grows. First-order perturbation theory in the quartic well
  // correction gives <j+1|n|j> ~ sqrt(j+1) [1 - E_C (j+1) / (2 w_0)] with
  // w_0 = sqrt(8 E_J E_C), so the ratio is sqrt(2) [1 - E_C / (2 w_0)].
  const LevelModel model = diagonalize_charge_basis(17.0, 0.270, 30, 3);
  const double ratio = model.second_coupling_ratio();
  EXPECT_LT(ratio, std::sqrt(2.0));
  const double w0 = std::sqrt(8.0 * 17.0 * 0.270);
  const double first_order = std::sqrt(2.0) * (1.0 - 0.270 / (2.0 * w0));
  EXPECT_NEAR(ratio, first_order, 0.02);

  const LevelModel deeper = diagonalize_charge_basis(60.0, 0.200, 40, 3);
  EXPECT_LT(deeper.second_coupling_ratio(), std::sqrt(2.0));
  EXPECT_LT(std::abs(deeper.second_coupling_ratio() - std::sqrt(2.0)),
            std::abs(ratio - std::sqrt(2.0)));
}

TEST(ChargeBasis, ChargeElementMatchesHarmonicScale) {
  // <1|n|0> ~ (E_J / 8 E_C)^(1/4) / sqrt(2) in the transmon limit.
  double q01 = 0.0;
  diagonalize_charge_basis(17.0, 0.270, 30, 3, &q01);
  const double harmonic = std::pow(17.0 / (8.0 * 0.270), 0.25) / std::sqrt(2.0);
  EXPECT_NEAR(q01, harmonic, 0.05 * harmonic);
}

TEST(ChargeBasis, RejectsBadArguments) {
  EXPECT_THROW(diagonalize_charge_basis(0.0, 0.3, 30, 3), std::domain_error);
  EXPECT_THROW(diagonalize_charge_basis(17.0, 0.0, 30, 3), std::domain_error);
  EXPECT_THROW(diagonalize_charge_basis(17.0, 0.3, 30, 1), std::domain_error);
  EXPECT_THROW(diagonalize_charge_basis(17.0, 0.3, 2, 3), std::domain_error);
}

TEST(ChargeBasis, EnergiesAreAnchoredAtZero) {
  const LevelModel model = diagonalize_charge_basis(17.0, 0.270, 30, 5);
  EXPECT_DOUBLE_EQ(model.energies[0], 0.0);
  for (int k = 0; k + 1 < 5; ++k) {
    EXPECT_GT(model.energies[k + 1], model.energies[k]);
    EXPECT_GT(model.charge_couplings[k], 0.0);
  }
}

TEST(CouplingTipAngle, ScalesLinearlyInSmallCouplingCapacitance) {
  CouplingSpec coupling;
  coupling.coupling_capacitance_af = 50.0;
  coupling.self_capacitance_ff = 85.0;
  coupling.charge_element_01 = 0.55;
  const double base = tip_angle_from_coupling(coupling);

  coupling.coupling_capacitance_af = 100.0;
  const double doubled = tip_angle_from_coupling(coupling);
  EXPECT_NEAR(doubled / base, 2.0, 2e-3);
}

TEST(CouplingTipAngle, TypicalHardwareLandsNearThreeHundredths) {
  // 100 aF against an 85 fF island with a transmon-scale charge element.
  double q01 = 0.0;
  diagonalize_charge_basis(17.0, 0.270, 30, 3, &q01);
  CouplingSpec coupling;
  coupling.coupling_capacitance_af = 100.0;
  coupling.self_capacitance_ff = 85.0;
  coupling.charge_element_01 = q01;
  const double angle = tip_angle_from_coupling(coupling);
  EXPECT_GT(angle, 0.005);
  EXPECT_LT(angle, 0.1);
}

TEST(CouplingTipAngle, RejectsUnphysicalInputs) {
  CouplingSpec coupling;
  coupling.coupling_capacitance_af = 0.0;
  coupling.self_capacitance_ff = 85.0;
  coupling.charge_element_01 = 0.55;
  EXPECT_THROW(tip_angle_from_coupling(coupling), std::domain_error);

  coupling.coupling_capacitance_af = 100.0;
  coupling.self_capacitance_ff = 0.0;
  EXPECT_THROW(tip_angle_from_coupling(coupling), std::domain_error);

  coupling.self_capacitance_ff = 85.0;
  coupling.charge_element_01 = 0.0;
  EXPECT_THROW(tip_angle_from_coupling(coupling), std::domain_error);

  // A coupling capacitance overwhelming the island would tip past pi.
  coupling.charge_element_01 = 2.0;
  coupling.coupling_capacitance_af = 1e9;
  EXPECT_THROW(tip_angle_from_coupling(coupling), std::domain_error);
}

}  // namespace
}  // namespace scallop
