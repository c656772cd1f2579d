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

// Command-line front end. Configuration comes from an optional JSON file
// (--config) with individual flags overriding it; every command writes its
// artifacts under --out and prints a one-line key=value summary.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "scallop/commands.hpp"
#include "scallop/config.hpp"

namespace {

struct Overrides {
  std::optional<double> clock, alpha, tip_angle, a_sym, floor, f_min, f_max,
      target_time;
  std::optional<int> search_levels, verify_levels, min_subseq, max_subseq,
      budget;
  std::optional<std::string> out_dir;

  void apply(scallop::RunConfig& config) const {
    if (clock) config.clock_frequency_ghz = *clock;
    if (alpha) config.anharmonicity_ghz = *alpha;
    if (tip_angle) config.fixed_tip_angle = *tip_angle;
    if (a_sym) config.a_sym_threshold = *a_sym;
    if (floor) config.fidelity_floor = *floor;
    if (f_min) config.f_min_ghz = *f_min;
    if (f_max) config.f_max_ghz = *f_max;
    if (target_time) config.target_gate_time_ns = *target_time;
    if (search_levels) config.search_levels = *search_levels;
    if (verify_levels) config.verify_levels = *verify_levels;
    if (min_subseq) config.min_subseq_clocks = *min_subseq;
    if (max_subseq) config.max_subseq_clocks = *max_subseq;
    if (budget) config.vertex_budget = *budget;
    if (out_dir) config.output_dir = *out_dir;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "scallop: synthesis and verification of SFQ pulse bitstreams for "
      "high-fidelity transmon y-rotations"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON configuration file")
      ->check(CLI::ExistingFile);

  Overrides ov;
  app.add_option("--clock", ov.clock, "SFQ clock frequency, GHz (default 25)");
  app.add_option("--alpha", ov.alpha, "anharmonicity, GHz (default 0.25)");
  app.add_option("--tip-angle", ov.tip_angle,
                 "fixed hardware tip angle, rad (default 0.032)");
  app.add_option("--a-sym-threshold", ov.a_sym,
                 "symmetry-violation cut for pair moves (default 0.05)");
  app.add_option("--fidelity-floor", ov.floor,
                 "search acceptance floor (default 0.9999)");
  app.add_option("--f-min", ov.f_min, "low end of frequency range, GHz");
  app.add_option("--f-max", ov.f_max, "high end of frequency range, GHz");
  app.add_option("--target-time", ov.target_time,
                 "target gate time, ns (default 12)");
  app.add_option("--search-levels", ov.search_levels,
                 "transmon levels during search (default 3)");
  app.add_option("--verify-levels", ov.verify_levels,
                 "transmon levels for verification (default 7)");
  app.add_option("--min-subseq", ov.min_subseq,
                 "shortest subsequence length, clocks (default 35)");
  app.add_option("--max-subseq", ov.max_subseq,
                 "longest subsequence length, clocks (default 55)");
  app.add_option("--budget", ov.budget,
                 "neighborhood vertex budget (default 5000)");
  app.add_option("--out", ov.out_dir, "output directory (default .)");

  CLI::App* grid =
      app.add_subcommand("grid", "enumerate magic frequencies, write grid.csv");
  grid->fallthrough();

  CLI::App* derive = app.add_subcommand(
      "derive", "derive a register and neighborhood catalog for one frequency");
  derive->fallthrough();
  double derive_f_q = 0.0;
  derive->add_option("--f-q", derive_f_q, "magic qubit frequency, GHz")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "replay a register, write gate report and population trace");
  verify->fallthrough();
  std::string verify_register;
  std::optional<double> verify_f_q;
  std::optional<int> verify_reps;
  verify->add_option("register", verify_register, "register bits file")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--f-q", verify_f_q, "override model qubit frequency, GHz");
  verify->add_option("--repetitions", verify_reps,
                     "override subsequence repetitions");

  CLI::App* sensitivity = app.add_subcommand(
      "sensitivity", "scan infidelity against frequency or anharmonicity drift");
  sensitivity->fallthrough();
  std::string sens_register;
  std::string sens_axis;
  std::optional<double> sens_span;
  std::optional<double> sens_f_q;
  std::optional<int> sens_reps;
  sensitivity->add_option("register", sens_register, "register bits file")
      ->required()
      ->check(CLI::ExistingFile);
  sensitivity
      ->add_option("--axis", sens_axis, "'frequency' (kHz) or 'anharmonicity' (MHz)")
      ->required();
  sensitivity->add_option(
      "--span", sens_span,
      "scan half-width (kHz for frequency, MHz for anharmonicity; defaults "
      "1000 kHz / 10 MHz)");
  sensitivity->add_option("--f-q", sens_f_q,
                          "override model qubit frequency, GHz");
  sensitivity->add_option("--repetitions", sens_reps,
                          "override subsequence repetitions");

  CLI::App* catalog = app.add_subcommand(
      "catalog", "derive every grid frequency, write the summary table");
  catalog->fallthrough();

  app.footer(
      "Examples:\n"
      "  scallop --out runs grid\n"
      "  scallop --out runs derive --f-q 4.8913043478260869\n"
      "  scallop --out runs verify runs/register_9_46.txt\n"
      "  scallop --out runs sensitivity runs/register_9_46.txt --axis frequency\n"
      "  scallop --out runs --budget 500 catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    scallop::RunConfig config;
    if (!config_path.empty()) {
      config = scallop::RunConfig::from_json_file(config_path);
    }
    ov.apply(config);

    if (grid->parsed()) {
      return scallop::cmd_grid(config, std::cout);
    }
    if (derive->parsed()) {
      return scallop::cmd_derive(config, derive_f_q, std::cout);
    }
    if (verify->parsed()) {
      return scallop::cmd_verify(verify_register, config, std::cout,
                                 verify_f_q, verify_reps);
    }
    if (sensitivity->parsed()) {
      const double span =
          sens_span.value_or(sens_axis == "anharmonicity" ? 10.0 : 1000.0);
      return scallop::cmd_sensitivity(sens_register, config, sens_axis, span,
                                      std::cout, sens_f_q, sens_reps);
    }
    if (catalog->parsed()) {
      return scallop::cmd_catalog(config, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
