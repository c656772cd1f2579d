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

#ifndef SCALLOP_CONFIG_HPP
#define SCALLOP_CONFIG_HPP

/// Run configuration shared by all commands, loadable from JSON with
/// command-line overrides applied on top.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "scallop/io.hpp"
#include "scallop/sequence.hpp"
#include "scallop/transmon.hpp"

namespace scallop {

struct RunConfig {
  double clock_frequency_ghz = 25.0;
  double anharmonicity_ghz = 0.250;
  int search_levels = 3;
  int verify_levels = 7;
  double fixed_tip_angle = 0.032;
  double a_sym_threshold = 0.05;
  double fidelity_floor = 0.9999;
  double f_min_ghz = 4.5;
  double f_max_ghz = 5.5;
  int max_subseq_clocks = 55;
  int min_subseq_clocks = 35;
  double target_gate_time_ns = 12.0;
  int vertex_budget = 5000;
  std::string output_dir = ".";

  ClockSpec clock() const { return ClockSpec{clock_frequency_ghz}; }

  TransmonSpec transmon(double f_q_ghz, int levels) const {
    TransmonSpec spec;
    spec.qubit_frequency_ghz = f_q_ghz;
    spec.anharmonicity_ghz = anharmonicity_ghz;
    spec.levels = levels;
    return spec;
  }

  void validate() const {
    if (!(clock_frequency_ghz > 0.0)) {
      throw std::domain_error("config: clock_frequency_ghz must be positive");
    }
    if (!(anharmonicity_ghz >= 0.0)) {
      throw std::domain_error("config: anharmonicity_ghz must be non-negative");
    }
    if (search_levels < 2 || verify_levels < 2) {
      throw std::domain_error("config: level counts must be >= 2");
    }
    if (!(fixed_tip_angle > 0.0 && fixed_tip_angle <= 0.1)) {
      throw std::domain_error("config: fixed_tip_angle outside (0, 0.1]");
    }
    if (!(a_sym_threshold > 0.0 && a_sym_threshold <= 0.5)) {
      throw std::domain_error("config: a_sym_threshold outside (0, 0.5]");
    }
    if (!(fidelity_floor > 0.0 && fidelity_floor <= 1.0)) {
      throw std::domain_error("config: fidelity_floor outside (0, 1]");
    }
    if (!(f_min_ghz > 0.0) || !(f_max_ghz >= f_min_ghz)) {
      throw std::domain_error("config: bad frequency range");
    }
    if (min_subseq_clocks < 1 || max_subseq_clocks < min_subseq_clocks) {
      throw std::domain_error("config: bad subsequence length window");
    }
    if (!(target_gate_time_ns >= 0.0)) {
      throw std::domain_error("config: negative target gate time");
    }
    if (vertex_budget < 1) {
      throw std::domain_error("config: vertex_budget must be >= 1");
    }
    if (output_dir.empty()) {
      throw std::domain_error("config: empty output_dir");
    }
  }

  /// Applies values from a JSON object; unknown keys are rejected so typos
  /// do not silently fall back to defaults.
  void apply_json(const nlohmann::json& j) {
    if (!j.is_object()) {
      throw std::invalid_argument("config: top-level JSON must be an object");
    }
    for (const auto& [key, value] : j.items()) {
      if (key == "clock_frequency_ghz") {
        clock_frequency_ghz = value.get<double>();
      } else if (key == "anharmonicity_ghz") {
        anharmonicity_ghz = value.get<double>();
      } else if (key == "search_levels") {
        search_levels = value.get<int>();
      } else if (key == "verify_levels") {
        verify_levels = value.get<int>();
      } else if (key == "fixed_tip_angle") {
        fixed_tip_angle = value.get<double>();
      } else if (key == "a_sym_threshold") {
        a_sym_threshold = value.get<double>();
      } else if (key == "fidelity_floor") {
        fidelity_floor = value.get<double>();
      } else if (key == "frequency_range_ghz") {
        if (!value.is_array() || value.size() != 2) {
          throw std::invalid_argument(
              "config: frequency_range_ghz must be [f_min, f_max]");
        }
        f_min_ghz = value[0].get<double>();
        f_max_ghz = value[1].get<double>();
      } else if (key == "max_subseq_clocks") {
        max_subseq_clocks = value.get<int>();
      } else if (key == "min_subseq_clocks") {
        min_subseq_clocks = value.get<int>();
      } else if (key == "target_gate_time_ns") {
        target_gate_time_ns = value.get<double>();
      } else if (key == "vertex_budget") {
        vertex_budget = value.get<int>();
      } else if (key == "output_dir") {
        output_dir = value.get<std::string>();
      } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
      }
    }
  }

  static RunConfig from_json_file(const std::string& path) {
    RunConfig config;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error("config does not parse: " + path + ": " +
                               e.what());
    }
    config.apply_json(j);
    return config;
  }
};

}  // namespace scallop

#endif  // SCALLOP_CONFIG_HPP
