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

#include "scallop/search.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace scallop {
namespace {

LevelModel duffing(double f_q_ghz, int levels) {
  TransmonSpec spec;
  spec.qubit_frequency_ghz = f_q_ghz;
  spec.anharmonicity_ghz = 0.250;
  spec.levels = levels;
  return build_duffing_ladder(spec);
}

TEST(BasicSubsequence, FiveClockFrameMatchesHandEvaluation) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  EXPECT_EQ(basic_subsequence(grid).to_string(), "11001");
}

TEST(BasicSubsequence, QuarterTurnBoundaryCountsAsInside) {
  // frac(1/4) = 1/4 and frac(3/4) = 3/4 sit exactly on the cut and stay set.
  const GridPoint grid = GridPoint::from_cycles(1, 4, ClockSpec{});
  EXPECT_EQ(basic_subsequence(grid).to_string(), "1101");
}

TEST(BasicSubsequence, ResonantFrameKicksEveryEdge) {
  const GridPoint grid = GridPoint::from_cycles(10, 5, ClockSpec{});
  EXPECT_EQ(basic_subsequence(grid).to_string(), "11111");
}

TEST(BasicSubsequence, PalindromicAroundEdgeZero) {
  for (auto [nq, nc] : {std::pair{8, 39}, {9, 46}, {8, 43}, {11, 55}}) {
    const GridPoint grid = GridPoint::from_cycles(nq, nc, ClockSpec{});
    const Bitstream seq = basic_subsequence(grid);
    for (int k = 0; k < nc; ++k) {
      EXPECT_EQ(seq.bits[k], seq.bits[(nc - k) % nc])
          << nq << "/" << nc << " bit " << k;
    }
  }
}

TEST(BasicSubsequence, AnchorFramePopulation) {
  const GridPoint grid = GridPoint::from_cycles(8, 39, ClockSpec{});
  const int pulses = basic_subsequence(grid).popcount();
  EXPECT_GE(pulses, 19);
  EXPECT_LE(pulses, 20);
}

TEST(TipSeed, ResonantTrainSeedIsQuarterPeriodOverPulses) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const Bitstream train = Bitstream::from_string("10000", grid.clock());
  EXPECT_NEAR(first_order_tip_seed(train, grid, 50),
              std::numbers::pi / 100.0, 1e-12);
}

TEST(TipSeed, NoPositiveRotationMeansNoSeed) {
  const GridPoint grid = GridPoint::from_cycles(1, 2, ClockSpec{});
  // The only pulse sits at qubit phase pi, projecting to -1.
  const Bitstream seq = Bitstream::from_string("01", grid.clock());
  EXPECT_EQ(first_order_tip_seed(seq, grid, 5), 0.0);

  Bitstream zeros = Bitstream::from_string("00", grid.clock());
  EXPECT_EQ(first_order_tip_seed(zeros, grid, 5), 0.0);
}

TEST(TipSeed, RejectsLengthMismatch) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const Bitstream four = Bitstream::from_string("1000", grid.clock());
  EXPECT_THROW(first_order_tip_seed(four, grid, 5), std::invalid_argument);
}

TEST(OptimizeTipAngle, AnchorSubsequenceLandsNearEstablishedOptimum) {
  const GridPoint grid = GridPoint::from_cycles(8, 39, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 3);
  const Bitstream basic = basic_subsequence(grid);
  const double seed = first_order_tip_seed(basic, grid, 10);
  const TipAngleResult r = optimize_tip_angle(basic, grid, model, 10, seed);
  EXPECT_NEAR(r.tip_angle, 0.0126, 0.1 * 0.0126);
  EXPECT_FALSE(r.degenerate);
}

TEST(OptimizeTipAngle, BeatsADenseScanOracle) {
  const GridPoint grid = GridPoint::from_cycles(8, 39, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 3);
  const Bitstream basic = basic_subsequence(grid);
  const double seed = first_order_tip_seed(basic, grid, 10);
  const TipAngleResult r = optimize_tip_angle(basic, grid, model, 10, seed);

  const SequenceEvaluator eval(basic, model, 10);
  const auto oracle = scallop_test::scan_maximum(
      [&](double t) { return eval.fidelity(t); }, 0.5 * seed, 1.5 * seed,
      4001);
  EXPECT_GE(r.fidelity, oracle.value - 1e-9);
  EXPECT_NEAR(r.tip_angle, oracle.x, seed / 4000.0 + 1e-5);
}

TEST(OptimizeTipAngle, DoubledTipAtHalvedRepetitionsScoresAlike) {
  // Gate time scales as T_c / (2 tip): doubling the tip while halving the
  // passes keeps the rotation budget, so fidelities agree up to corrections
  // beyond first order, which shrink with the tip itself.
  const GridPoint grid = GridPoint::from_cycles(8, 39, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 3);
  const Bitstream basic = basic_subsequence(grid);

  const double seed20 = first_order_tip_seed(basic, grid, 20);
  const TipAngleResult twenty =
      optimize_tip_angle(basic, grid, model, 20, seed20);
  const SequenceEvaluator ten(basic, model, 10);
  const double diff20 =
      std::abs(ten.fidelity(2.0 * twenty.tip_angle) - twenty.fidelity);
  EXPECT_LT(diff20, 1e-3);

  const double seed40 = first_order_tip_seed(basic, grid, 40);
  const TipAngleResult forty =
      optimize_tip_angle(basic, grid, model, 40, seed40);
  const SequenceEvaluator twenty_eval(basic, model, 20);
  const double diff40 =
      std::abs(twenty_eval.fidelity(2.0 * forty.tip_angle) - forty.fidelity);
  EXPECT_LT(diff40, diff20);
}

TEST(OptimizeTipAngle, AllZeroPatternIsDegenerate) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 3);
  Bitstream zeros = Bitstream::from_string("00000", grid.clock());
  const TipAngleResult r = optimize_tip_angle(zeros, grid, model, 4, 0.05);
  EXPECT_TRUE(r.degenerate);
  EXPECT_DOUBLE_EQ(r.tip_angle, 0.05);
}

TEST(OptimizeTipAngle, RejectsSeedOutsideHardwareRange) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 3);
  const Bitstream train = Bitstream::from_string("10000", grid.clock());
  EXPECT_THROW(optimize_tip_angle(train, grid, model, 4, 0.0),
               std::domain_error);
  EXPECT_THROW(optimize_tip_angle(train, grid, model, 4, 0.11),
               std::domain_error);
}

TEST(FidelityBand, TwoLevelTrainMatchesClosedFormEdges) {
  // In a two-level model a once-per-period train is an exact y-rotation by
  // R * tip, so the band edges solve (2/3) sin^2(e/2) = 1e-4 with
  // e = R * (tip - tip_opt).
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 2);
  const Bitstream train = Bitstream::from_string("10000", grid.clock());
  const int reps = 50;
  const SequenceEvaluator eval(train, model, reps);

  const double tip_opt = 0.5 * std::numbers::pi / reps;
  EXPECT_NEAR(eval.fidelity(tip_opt), 1.0, 1e-12);

  const auto band = fidelity_band(eval, tip_opt);
  const double half_width =
      2.0 * std::asin(std::sqrt(1.5e-4)) / static_cast<double>(reps);
  EXPECT_NEAR(band.first, tip_opt - half_width, 1e-6);
  EXPECT_NEAR(band.second, tip_opt + half_width, 1e-6);
}

TEST(FidelityBand, RejectsOptimumOutsideTheBand) {
  // Three-level leakage keeps this short train above 1e-4 infidelity.
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 3);
  const Bitstream train = Bitstream::from_string("10000", grid.clock());
  const SequenceEvaluator eval(train, model, 10);
  EXPECT_THROW(fidelity_band(eval, 0.5 * std::numbers::pi / 10.0),
               std::domain_error);
}

TEST(EvaluateVertex, BandPopulatedExactlyWhenOptimumClears) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const Bitstream train = Bitstream::from_string("10000", grid.clock());

  const Vertex clean =
      evaluate_vertex(train, grid, duffing(grid.qubit_frequency_ghz, 2), 50);
  EXPECT_GT(clean.fidelity_opt, 1.0 - 1e-6);
  EXPECT_TRUE(clean.has_band());
  EXPECT_TRUE(clean.band_contains(clean.tip_angle_opt));

  const Vertex leaky =
      evaluate_vertex(train, grid, duffing(grid.qubit_frequency_ghz, 3), 10);
  EXPECT_LT(leaky.fidelity_opt, 1.0 - 1e-4);
  EXPECT_FALSE(leaky.has_band());
  EXPECT_FALSE(leaky.band_contains(leaky.tip_angle_opt));
}

TEST(EvaluateVertex, SeedlessPatternScoresZero) {
  const GridPoint grid = GridPoint::from_cycles(1, 2, ClockSpec{});
  const Bitstream seq = Bitstream::from_string("01", grid.clock());
  const Vertex v =
      evaluate_vertex(seq, grid, duffing(grid.qubit_frequency_ghz, 3), 5);
  EXPECT_EQ(v.fidelity_opt, 0.0);
  EXPECT_FALSE(v.has_band());
}

TEST(Neighbors, TogglesEqualValuedPairsOnly) {
  const auto pairs = enumerate_symmetric_pairs(39, 8, 0.05);
  Bitstream zeros;
  zeros.bits.assign(39, 0);
  const auto moved = neighbors(zeros, pairs);
  // Every pair qualifies on the all-zero pattern.
  EXPECT_EQ(moved.size(), pairs.size());

  bool saw_mirror = false;
  for (const Bitstream& nb : moved) {
    EXPECT_EQ(nb.size(), 39);
    if (nb.bits[1] == 1 && nb.bits[38] == 1 && nb.popcount() == 2) {
      saw_mirror = true;
    }
  }
  EXPECT_TRUE(saw_mirror);
}

TEST(Neighbors, PairToggleIsAnInvolution) {
  const auto pairs = enumerate_symmetric_pairs(10, 2, 0.05);
  const Bitstream seq = Bitstream::from_string("1100100101", ClockSpec{});
  for (const auto& nb : neighbors(seq, pairs)) {
    bool returned = false;
    for (const auto& back : neighbors(nb, pairs)) {
      if (back == seq) returned = true;
    }
    EXPECT_TRUE(returned);
  }
}

TEST(Neighbors, MixedValuedPairsProduceNoMove) {
  std::vector<ClockPair> one_pair(1);
  one_pair[0].edge_a = 1;
  one_pair[0].edge_b = 4;
  const Bitstream mixed = Bitstream::from_string("01000", ClockSpec{});
  EXPECT_TRUE(neighbors(mixed, one_pair).empty());

  const Bitstream equal = Bitstream::from_string("01001", ClockSpec{});
  const auto moved = neighbors(equal, one_pair);
  ASSERT_EQ(moved.size(), 1u);
  EXPECT_EQ(moved[0].to_string(), "00000");
}

TEST(Neighbors, SelfPairedEdgeFlipsAlone) {
  std::vector<ClockPair> self_pair(1);
  self_pair[0].edge_a = 2;
  self_pair[0].edge_b = 2;
  const Bitstream seq = Bitstream::from_string("00000", ClockSpec{});
  const auto moved = neighbors(seq, self_pair);
  ASSERT_EQ(moved.size(), 1u);
  EXPECT_EQ(moved[0].to_string(), "00100");
}

TEST(GreedyClimb, PathIsStrictlyImprovingFromTheBasicSeed) {
  const GridPoint grid = GridPoint::from_cycles(8, 39, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 3);
  const ClimbResult climb =
      greedy_climb(basic_subsequence(grid), grid, model, 10);

  ASSERT_GE(climb.path_fidelities.size(), 1u);
  for (std::size_t k = 1; k < climb.path_fidelities.size(); ++k) {
    EXPECT_GT(climb.path_fidelities[k], climb.path_fidelities[k - 1]);
  }
  EXPECT_DOUBLE_EQ(climb.path_fidelities.back(), climb.vertex.fidelity_opt);
  EXPECT_GE(climb.vertex.fidelity_opt, climb.path_fidelities.front());
  EXPECT_GE(climb.evaluations, climb.path_fidelities.size());
  EXPECT_EQ(climb.vertex.bits.size(), 39);
}

TEST(GreedyClimb, LocalMaximumSeedReturnsImmediately) {
  // In the two-level model the once-per-period train is already optimal
  // against every symmetric-pair move.
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 2);
  const Bitstream train = Bitstream::from_string("10000", grid.clock());
  const ClimbResult climb = greedy_climb(train, grid, model, 50);
  EXPECT_EQ(climb.path_fidelities.size(), 1u);
  EXPECT_EQ(climb.vertex.bits, train);
}

TEST(NeighborhoodBfs, UnitFloorKeepsAtMostTheEntry) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 2);
  const Bitstream train = Bitstream::from_string("10000", grid.clock());
  const Vertex entry = evaluate_vertex(train, grid, model, 50);

  const Neighborhood hood =
      neighborhood_bfs(entry, grid, model, 50, 1.0, 100);
  EXPECT_LE(hood.vertices.size(), 1u);
}

TEST(NeighborhoodBfs, BudgetOneKeepsExactlyTheEntry) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 2);
  const Vertex entry = evaluate_vertex(
      Bitstream::from_string("10000", grid.clock()), grid, model, 50);
  const Neighborhood hood =
      neighborhood_bfs(entry, grid, model, 50, 0.9999, 1);
  ASSERT_EQ(hood.vertices.size(), 1u);
  EXPECT_EQ(hood.vertices[0].bits, entry.bits);
  EXPECT_TRUE(hood.budget_exhausted);
}

TEST(NeighborhoodBfs, EntryBelowFloorYieldsEmptyNeighborhood) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 3);
  const Vertex entry = evaluate_vertex(
      Bitstream::from_string("10000", grid.clock()), grid, model, 10);
  ASSERT_LT(entry.fidelity_opt, 0.9999);
  const Neighborhood hood =
      neighborhood_bfs(entry, grid, model, 10, 0.9999, 100);
  EXPECT_TRUE(hood.vertices.empty());
}

TEST(NeighborhoodBfs, CollectsDistinctVerticesAboveTheFloor) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 2);
  const Vertex entry = evaluate_vertex(
      Bitstream::from_string("10000", grid.clock()), grid, model, 50);
  const Neighborhood hood =
      neighborhood_bfs(entry, grid, model, 50, 0.9999, 200);

  EXPECT_GT(hood.vertices.size(), 1u);
  EXPECT_EQ(hood.vertices[0].bits, entry.bits);
  std::set<std::string> patterns;
  for (const Vertex& v : hood.vertices) {
    EXPECT_GE(v.fidelity_opt, 0.9999);
    EXPECT_TRUE(patterns.insert(v.bits.to_string()).second);
    if (v.has_band()) {
      const SequenceEvaluator eval(v.bits, model, v.repetitions);
      EXPECT_NEAR(1.0 - eval.fidelity(v.band_lo), 1e-4, 3e-6);
      EXPECT_NEAR(1.0 - eval.fidelity(v.band_hi), 1e-4, 3e-6);
    }
  }
  EXPECT_GE(hood.evaluated, hood.vertices.size());
}

TEST(SelectForTipAngle, OwnOptimumSelectsThatVertexOrBetter) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 2);
  const Vertex entry = evaluate_vertex(
      Bitstream::from_string("10000", grid.clock()), grid, model, 50);
  const Neighborhood hood =
      neighborhood_bfs(entry, grid, model, 50, 0.9999, 60);

  const Selection sel =
      select_for_tip_angle(hood, entry.tip_angle_opt, model);
  EXPECT_GE(sel.fidelity, entry.fidelity_opt - 1e-12);
  EXPECT_FALSE(sel.below_threshold);
}

TEST(SelectForTipAngle, OffBandAngleRaisesTheFlag) {
  const GridPoint grid = GridPoint::from_cycles(1, 5, ClockSpec{});
  const LevelModel model = duffing(grid.qubit_frequency_ghz, 2);
  const Vertex entry = evaluate_vertex(
      Bitstream::from_string("10000", grid.clock()), grid, model, 50);
  Neighborhood hood;
  hood.vertices.push_back(entry);
  const Selection sel = select_for_tip_angle(hood, 0.09, model);
  EXPECT_TRUE(sel.below_threshold);

  const Neighborhood empty;
  EXPECT_THROW(select_for_tip_angle(empty, 0.032, model),
               std::invalid_argument);
}

TEST(ChooseRepetitions, OrdersByDistanceToTargetGateTime) {
  const GridPoint frame46 = GridPoint::from_cycles(9, 46, ClockSpec{});
  const auto reps46 = choose_repetitions(frame46, 0.032, 12.0);
  ASSERT_GE(reps46.size(), 3u);
  // 7 passes take 12.88 ns, 6 passes 11.04 ns.
  EXPECT_EQ(reps46[0], 7);
  EXPECT_EQ(reps46[1], 6);

  const GridPoint frame39 = GridPoint::from_cycles(8, 39, ClockSpec{});
  EXPECT_EQ(choose_repetitions(frame39, 0.032, 15.6)[0], 10);
  EXPECT_EQ(choose_repetitions(frame39, 0.032, 0.0)[0], 1);
}

TEST(ChooseRepetitions, RejectsBadArguments) {
  const GridPoint frame = GridPoint::from_cycles(9, 46, ClockSpec{});
  EXPECT_THROW(choose_repetitions(frame, 0.0, 12.0), std::domain_error);
  EXPECT_THROW(choose_repetitions(frame, 0.11, 12.0), std::domain_error);
  EXPECT_THROW(choose_repetitions(frame, 0.032, -1.0), std::domain_error);
}

}  // namespace
}  // namespace scallop
