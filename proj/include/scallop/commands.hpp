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

#ifndef SCALLOP_COMMANDS_HPP
#define SCALLOP_COMMANDS_HPP

/// Command implementations behind the CLI verbs. Each command validates its
/// inputs, writes its artifacts under config.output_dir, prints a short
/// key=value summary, and returns a process exit code.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "scallop/config.hpp"
#include "scallop/frequency_grid.hpp"
#include "scallop/io.hpp"
#include "scallop/search.hpp"
#include "scallop/sequence.hpp"
#include "scallop/transmon.hpp"

namespace scallop {

/// Full derivation at one magic frequency: pick a subsequence frame inside
/// the length window, try the repetition counts closest to the target gate
/// time, and for each run seed -> greedy climb -> neighborhood sweep ->
/// fixed-angle selection. The candidate whose selected pattern scores best
/// at the fixed angle wins; ties keep the candidate closest to the target
/// time.
struct DeriveOutcome {
  GridPoint canonical;
  GridPoint frame;
  int frame_scale = 1;
  int repetitions = 0;
  ClimbResult climb;
  Neighborhood hood;
  Selection selection;
  /// False when no tried candidate produced a climb vertex at or above the
  /// fidelity floor; selection then holds the best-effort local maximum.
  bool reached_floor = false;
};

inline DeriveOutcome derive_sequence(const RunConfig& config,
                                     const GridPoint& canonical) {
  config.validate();
  const int scale = frame_scale_for_window(
      canonical.clock_cycles, config.min_subseq_clocks, config.max_subseq_clocks);
  if (scale == 0) {
    throw std::runtime_error(
        "no multiple of N_c = " + std::to_string(canonical.clock_cycles) +
        " fits the subsequence length window [" +
        std::to_string(config.min_subseq_clocks) + ", " +
        std::to_string(config.max_subseq_clocks) + "]");
  }
  DeriveOutcome out;
  out.canonical = canonical;
  out.frame_scale = scale;
  out.frame = scale_frame(canonical, scale);

  const LevelModel search_model = build_duffing_ladder(
      config.transmon(canonical.qubit_frequency_ghz, config.search_levels));
  const LevelModel verify_model = build_duffing_ladder(
      config.transmon(canonical.qubit_frequency_ghz, config.verify_levels));

  const std::vector<int> candidates = choose_repetitions(
      out.frame, config.fixed_tip_angle, config.target_gate_time_ns);
  const int tries = std::min<int>(3, static_cast<int>(candidates.size()));

  bool found = false;
  bool have_fallback = false;
  ClimbResult fallback_climb;
  int fallback_reps = 0;
  for (int i = 0; i < tries; ++i) {
    const int reps = candidates[i];
    ClimbResult climb =
        greedy_climb(basic_subsequence(out.frame), out.frame, search_model,
                     reps, config.a_sym_threshold);
    if (climb.vertex.fidelity_opt < config.fidelity_floor) {
      if (!have_fallback ||
          climb.vertex.fidelity_opt > fallback_climb.vertex.fidelity_opt) {
        have_fallback = true;
        fallback_climb = std::move(climb);
        fallback_reps = reps;
      }
      continue;
    }
    Neighborhood hood = neighborhood_bfs(
        climb.vertex, out.frame, search_model, reps, config.fidelity_floor,
        static_cast<std::size_t>(config.vertex_budget), config.a_sym_threshold);
    Selection sel =
        select_for_tip_angle(hood, config.fixed_tip_angle, verify_model);
    if (!found || sel.fidelity > out.selection.fidelity) {
      found = true;
      out.repetitions = reps;
      out.climb = std::move(climb);
      out.hood = std::move(hood);
      out.selection = std::move(sel);
    }
  }
  out.reached_floor = found;
  if (!found) {
    // Best effort: report the strongest local maximum found, as a
    // single-vertex neighborhood.
    out.repetitions = fallback_reps;
    out.hood.fidelity_floor = config.fidelity_floor;
    out.hood.evaluated = fallback_climb.evaluations;
    out.hood.vertices = {fallback_climb.vertex};
    out.climb = std::move(fallback_climb);
    out.selection =
        select_for_tip_angle(out.hood, config.fixed_tip_angle, verify_model);
  }
  return out;
}

namespace detail {

inline std::string frame_stem(const GridPoint& frame) {
  return std::to_string(frame.qubit_cycles) + "_" +
         std::to_string(frame.clock_cycles);
}

inline RegisterRecord register_from_outcome(const DeriveOutcome& d,
                                            const RunConfig& config) {
  RegisterRecord reg;
  reg.bits = d.selection.vertex.bits.to_string();
  reg.f_q_ghz = d.canonical.qubit_frequency_ghz;
  reg.qubit_cycles = d.frame.qubit_cycles;
  reg.clock_cycles = d.frame.clock_cycles;
  reg.repetitions = d.repetitions;
  reg.tip_angle = config.fixed_tip_angle;
  return reg;
}

inline void print_outcome(const DeriveOutcome& d, const RunConfig& config,
                          std::ostream& out) {
  const double gate_time = d.repetitions * d.frame.gate_time_ns;
  out << "f_q_ghz=" << format_g12(d.canonical.qubit_frequency_ghz)
      << " N_q=" << d.frame.qubit_cycles << " N_c=" << d.frame.clock_cycles
      << " repetitions=" << d.repetitions
      << " tip_angle=" << format_g12(config.fixed_tip_angle)
      << " verify_levels=" << config.verify_levels
      << " fidelity=" << format_g12(d.selection.fidelity)
      << " infidelity=" << format_g12(1.0 - d.selection.fidelity)
      << " gate_time_ns=" << format_g12(gate_time)
      << " below_threshold=" << (d.selection.below_threshold ? 1 : 0)
      << " reached_floor=" << (d.reached_floor ? 1 : 0) << "\n";
  out << "search: climb_steps=" << (d.climb.path_fidelities.size() - 1)
      << " vertices=" << d.hood.vertices.size()
      << " evaluated=" << d.hood.evaluated
      << " budget_exhausted=" << (d.hood.budget_exhausted ? 1 : 0) << "\n";
}

}  // namespace detail

/// Enumerates the magic-frequency grid and writes it as CSV.
inline int cmd_grid(const RunConfig& config, std::ostream& out) {
  config.validate();
  const std::vector<GridPoint> points = enumerate_magic_frequencies(
      config.clock(), config.f_min_ghz, config.f_max_ghz,
      config.max_subseq_clocks);
  std::filesystem::create_directories(config.output_dir);
  const std::filesystem::path path =
      std::filesystem::path(config.output_dir) / "grid.csv";
  write_grid_csv(path, points);
  out << "magic_frequencies=" << points.size()
      << " f_min_ghz=" << format_g12(config.f_min_ghz)
      << " f_max_ghz=" << format_g12(config.f_max_ghz)
      << " max_subseq_clocks=" << config.max_subseq_clocks << "\n";
  out << "wrote " << path.string() << "\n";
  return 0;
}

/// Derives a register for one magic frequency and writes the register plus
/// the neighborhood catalog.
inline int cmd_derive(const RunConfig& config, double f_q_ghz,
                      std::ostream& out) {
  config.validate();
  const std::vector<GridPoint> points = enumerate_magic_frequencies(
      config.clock(), config.f_min_ghz, config.f_max_ghz,
      config.max_subseq_clocks);
  const GridPoint* match = nullptr;
  for (const GridPoint& p : points) {
    if (std::abs(p.qubit_frequency_ghz - f_q_ghz) <= 1e-6) {
      match = &p;
      break;
    }
  }
  if (match == nullptr) {
    out << "error: " << format_g12(f_q_ghz)
        << " GHz is not a magic frequency of the current grid (1 kHz "
           "tolerance); nearest candidates:\n";
    std::vector<GridPoint> nearest = points;
    std::stable_sort(nearest.begin(), nearest.end(),
                     [&](const GridPoint& a, const GridPoint& b) {
                       return std::abs(a.qubit_frequency_ghz - f_q_ghz) <
                              std::abs(b.qubit_frequency_ghz - f_q_ghz);
                     });
    for (std::size_t i = 0; i < std::min<std::size_t>(3, nearest.size()); ++i) {
      out << "  N_q/N_c = " << nearest[i].qubit_cycles << "/"
          << nearest[i].clock_cycles << " -> "
          << format_g12(nearest[i].qubit_frequency_ghz) << " GHz\n";
    }
    return 2;
  }

  DeriveOutcome outcome;
  try {
    outcome = derive_sequence(config, *match);
  } catch (const std::runtime_error& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }

  std::filesystem::create_directories(config.output_dir);
  const std::filesystem::path dir(config.output_dir);
  const std::string stem = detail::frame_stem(outcome.frame);
  const std::filesystem::path register_path = dir / ("register_" + stem + ".txt");
  const std::filesystem::path catalog_path = dir / ("catalog_" + stem + ".jsonl");
  write_register(register_path, detail::register_from_outcome(outcome, config));
  write_catalog_jsonl(catalog_path, outcome.hood);

  detail::print_outcome(outcome, config, out);
  out << "wrote " << register_path.string() << " and " << catalog_path.string()
      << "\n";
  return outcome.reached_floor ? 0 : 2;
}

/// Replays a register under a chosen level truncation and writes the gate
/// report plus the per-edge population trace.
inline int cmd_verify(const std::string& register_file, const RunConfig& config,
                      std::ostream& out,
                      std::optional<double> f_q_override = std::nullopt,
                      std::optional<int> repetitions_override = std::nullopt) {
  config.validate();
  const RegisterRecord reg = read_register(register_file);
  const GridPoint frame = GridPoint::from_cycles(
      reg.qubit_cycles, reg.clock_cycles, config.clock());
  if (!f_q_override &&
      std::abs(frame.qubit_frequency_ghz - reg.f_q_ghz) > 1e-6) {
    out << "error: sidecar f_q_ghz=" << format_g12(reg.f_q_ghz)
        << " disagrees with N_q/N_c under a "
        << format_g12(config.clock_frequency_ghz) << " GHz clock ("
        << format_g12(frame.qubit_frequency_ghz) << ")\n";
    return 2;
  }
  const double f_q = f_q_override.value_or(frame.qubit_frequency_ghz);
  const int repetitions = repetitions_override.value_or(reg.repetitions);
  const LevelModel model =
      build_duffing_ladder(config.transmon(f_q, config.verify_levels));
  const Bitstream bits = Bitstream::from_string(reg.bits, frame.clock());
  const GateReport report =
      leakage_trace(bits, model, repetitions, reg.tip_angle);

  std::filesystem::create_directories(config.output_dir);
  const std::filesystem::path dir(config.output_dir);
  const std::string stem =
      std::filesystem::path(register_file).stem().string();
  const std::filesystem::path report_path = dir / (stem + "_report.json");
  const std::filesystem::path trace_path = dir / (stem + "_trace.csv");
  write_text_file(report_path, gate_report_json(report));
  write_trace_csv(trace_path, report);

  out << "fidelity=" << format_g12(report.fidelity)
      << " infidelity=" << format_g12(1.0 - report.fidelity)
      << " levels=" << report.levels
      << " repetitions=" << report.repetitions
      << " gate_time_ns=" << format_g12(report.gate_time_ns) << "\n";
  if (report.levels > 2) {
    out << "leakage: peak_2=" << format_g12(report.peak_population(2))
        << " boundary_2=" << format_g12(report.boundary_population(2)) << "\n";
  }
  out << "wrote " << report_path.string() << " and " << trace_path.string()
      << "\n";
  return 0;
}

inline constexpr int kSensitivityPoints = 21;

/// Scans gate infidelity against a symmetric drift of the qubit frequency
/// (span in kHz) or the anharmonicity (span in MHz) and writes the scan CSV.
inline int cmd_sensitivity(const std::string& register_file,
                           const RunConfig& config, const std::string& axis,
                           double span, std::ostream& out,
                           std::optional<double> f_q_override = std::nullopt,
                           std::optional<int> repetitions_override = std::nullopt) {
  config.validate();
  if (axis != "frequency" && axis != "anharmonicity") {
    out << "error: axis must be 'frequency' or 'anharmonicity'\n";
    return 2;
  }
  if (!(span > 0.0)) {
    out << "error: span must be positive\n";
    return 2;
  }
  const RegisterRecord reg = read_register(register_file);
  const GridPoint frame = GridPoint::from_cycles(
      reg.qubit_cycles, reg.clock_cycles, config.clock());
  const double f_q = f_q_override.value_or(frame.qubit_frequency_ghz);
  const int repetitions = repetitions_override.value_or(reg.repetitions);
  const Bitstream bits = Bitstream::from_string(reg.bits, frame.clock());

  std::ostringstream csv;
  csv << (axis == "frequency" ? "offset_khz" : "offset_mhz")
      << ",infidelity\n";
  double zero_offset_infidelity = 0.0;
  double max_infidelity = 0.0;
  for (int i = 0; i < kSensitivityPoints; ++i) {
    const double offset =
        span * (i - (kSensitivityPoints - 1) / 2) /
        ((kSensitivityPoints - 1) / 2);
    TransmonSpec spec = config.transmon(f_q, config.verify_levels);
    if (axis == "frequency") {
      spec.qubit_frequency_ghz = f_q + offset * 1e-6;
    } else {
      spec.anharmonicity_ghz = config.anharmonicity_ghz + offset * 1e-3;
    }
    const LevelModel model = build_duffing_ladder(spec);
    const SequenceEvaluator eval(bits, model, repetitions);
    const double infidelity = 1.0 - eval.fidelity(reg.tip_angle);
    if (offset == 0.0) zero_offset_infidelity = infidelity;
    max_infidelity = std::max(max_infidelity, infidelity);
    csv << format_g12(offset) << ',' << format_g12(infidelity) << "\n";
  }

  std::filesystem::create_directories(config.output_dir);
  const std::filesystem::path dir(config.output_dir);
  const std::string stem =
      std::filesystem::path(register_file).stem().string();
  const std::filesystem::path path =
      dir / (stem + "_sensitivity_" + axis + ".csv");
  write_text_file(path, csv.str());

  out << "axis=" << axis << " span=" << format_g12(span)
      << " points=" << kSensitivityPoints
      << " infidelity_at_zero=" << format_g12(zero_offset_infidelity)
      << " max_infidelity=" << format_g12(max_infidelity) << "\n";
  out << "wrote " << path.string() << "\n";
  return 0;
}

/// Derives every frequency of the grid and writes a summary table; failures
/// at single frequencies are recorded and the run continues.
inline int cmd_catalog(const RunConfig& config, std::ostream& out) {
  config.validate();
  const std::vector<GridPoint> points = enumerate_magic_frequencies(
      config.clock(), config.f_min_ghz, config.f_max_ghz,
      config.max_subseq_clocks);
  std::filesystem::create_directories(config.output_dir);
  const std::filesystem::path dir(config.output_dir);

  std::ostringstream csv;
  csv << "f_q_ghz,subsequence_clocks,repetitions,infidelity_x1e4,"
         "below_threshold,bits\n";
  std::size_t derived = 0;
  std::size_t clean = 0;
  for (const GridPoint& p : points) {
    DeriveOutcome outcome;
    try {
      outcome = derive_sequence(config, p);
    } catch (const std::runtime_error& e) {
      out << "skip f_q_ghz=" << format_g12(p.qubit_frequency_ghz) << ": "
          << e.what() << "\n";
      csv << format_g12(p.qubit_frequency_ghz) << ',' << p.clock_cycles
          << ",0,,1,\n";
      continue;
    }
    ++derived;
    const std::string stem = detail::frame_stem(outcome.frame);
    write_register(dir / ("register_" + stem + ".txt"),
                   detail::register_from_outcome(outcome, config));
    write_catalog_jsonl(dir / ("catalog_" + stem + ".jsonl"), outcome.hood);
    const bool flagged =
        outcome.selection.below_threshold || !outcome.reached_floor;
    if (!flagged) ++clean;
    csv << format_g12(p.qubit_frequency_ghz) << ','
        << outcome.frame.clock_cycles << ',' << outcome.repetitions << ','
        << format_g12((1.0 - outcome.selection.fidelity) * 1e4) << ','
        << (flagged ? 1 : 0) << ','
        << outcome.selection.vertex.bits.to_string() << "\n";
  }
  const std::filesystem::path summary_path = dir / "catalog_summary.csv";
  write_text_file(summary_path, csv.str());
  out << "frequencies=" << points.size() << " derived=" << derived
      << " below_threshold=" << (derived - clean) << "\n";
  out << "wrote " << summary_path.string() << "\n";
  return 0;
}

}  // namespace scallop

#endif  // SCALLOP_COMMANDS_HPP
