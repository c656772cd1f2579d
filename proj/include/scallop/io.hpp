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

#ifndef SCALLOP_IO_HPP
#define SCALLOP_IO_HPP

/// File formats: register bitstreams with JSON sidecars, neighborhood
/// catalogs as JSON lines, gate reports as JSON, traces and tables as CSV.
/// Every float is rendered with 12 significant digits so outputs are
/// byte-deterministic across runs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scallop/search.hpp"
#include "scallop/sequence.hpp"

namespace scallop {

inline std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A derived pulse program as stored on disk: the bit pattern next to the
/// parameters needed to replay it.
struct RegisterRecord {
  std::string bits;
  double f_q_ghz = 0.0;
  int qubit_cycles = 0;
  int clock_cycles = 0;
  int repetitions = 1;
  double tip_angle = 0.0;
};

inline std::filesystem::path register_sidecar_path(
    const std::filesystem::path& bits_path) {
  std::filesystem::path p = bits_path;
  p.replace_extension(".json");
  return p;
}

/// Writes the register as a single 0/1 line plus a JSON sidecar holding
/// f_q_ghz, N_q, N_c, repetitions and tip_angle.
inline void write_register(const std::filesystem::path& bits_path,
                           const RegisterRecord& reg) {
  write_text_file(bits_path, reg.bits + "\n");
  std::ostringstream json;
  json << "{\n"
       << "  \"f_q_ghz\": " << format_g12(reg.f_q_ghz) << ",\n"
       << "  \"N_q\": " << reg.qubit_cycles << ",\n"
       << "  \"N_c\": " << reg.clock_cycles << ",\n"
       << "  \"repetitions\": " << reg.repetitions << ",\n"
       << "  \"tip_angle\": " << format_g12(reg.tip_angle) << "\n"
       << "}\n";
  write_text_file(register_sidecar_path(bits_path), json.str());
}

inline RegisterRecord read_register(const std::filesystem::path& bits_path) {
  RegisterRecord reg;
  std::string line = read_text_file(bits_path);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                           line.back() == ' ')) {
    line.pop_back();
  }
  if (line.empty()) {
    throw std::runtime_error("register is empty: " + bits_path.string());
  }
  for (char c : line) {
    if (c != '0' && c != '1') {
      throw std::runtime_error("register must hold a single 0/1 line: " +
                               bits_path.string());
    }
  }
  reg.bits = line;

  const std::filesystem::path side = register_sidecar_path(bits_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(side));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("register sidecar does not parse: " +
                             side.string() + ": " + e.what());
  }
  for (const char* key : {"f_q_ghz", "N_q", "N_c", "repetitions", "tip_angle"}) {
    if (!j.contains(key)) {
      throw std::runtime_error("register sidecar missing key '" +
                               std::string(key) + "': " + side.string());
    }
  }
  reg.f_q_ghz = j["f_q_ghz"].get<double>();
  reg.qubit_cycles = j["N_q"].get<int>();
  reg.clock_cycles = j["N_c"].get<int>();
  reg.repetitions = j["repetitions"].get<int>();
  reg.tip_angle = j["tip_angle"].get<double>();
  if (static_cast<int>(reg.bits.size()) != reg.clock_cycles) {
    throw std::runtime_error("register length disagrees with sidecar N_c: " +
                             bits_path.string());
  }
  return reg;
}

/// One catalog line per vertex, fixed key order.
inline std::string vertex_jsonl_line(const Vertex& v) {
  std::ostringstream line;
  line << "{\"bits\": \"" << v.bits.to_string() << "\""
       << ", \"N_q\": " << v.grid.qubit_cycles
       << ", \"N_c\": " << v.grid.clock_cycles
       << ", \"f_q_ghz\": " << format_g12(v.grid.qubit_frequency_ghz)
       << ", \"tip_angle_opt\": " << format_g12(v.tip_angle_opt)
       << ", \"fidelity_opt\": " << format_g12(v.fidelity_opt)
       << ", \"band_lo\": " << format_g12(v.band_lo)
       << ", \"band_hi\": " << format_g12(v.band_hi)
       << ", \"repetitions\": " << v.repetitions << "}";
  return line.str();
}

/// Neighborhood catalog as JSON lines in discovery order. A vertex without a
/// band keeps band_hi < band_lo.
inline void write_catalog_jsonl(const std::filesystem::path& path,
                                const Neighborhood& hood) {
  std::ostringstream out;
  for (const Vertex& v : hood.vertices) {
    out << vertex_jsonl_line(v) << "\n";
  }
  write_text_file(path, out.str());
}

inline std::vector<Vertex> read_catalog_jsonl(
    const std::filesystem::path& path, const ClockSpec& clock) {
  std::vector<Vertex> vertices;
  std::istringstream in(read_text_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    Vertex v;
    v.grid = GridPoint::from_cycles(j["N_q"].get<int>(), j["N_c"].get<int>(),
                                    clock);
    v.bits = Bitstream::from_string(j["bits"].get<std::string>(), v.grid.clock());
    v.tip_angle_opt = j["tip_angle_opt"].get<double>();
    v.fidelity_opt = j["fidelity_opt"].get<double>();
    v.band_lo = j["band_lo"].get<double>();
    v.band_hi = j["band_hi"].get<double>();
    v.repetitions = j["repetitions"].get<int>();
    vertices.push_back(std::move(v));
  }
  return vertices;
}

/// Gate report as a JSON document: end-of-gate summary plus per-level
/// population extremes.
inline std::string gate_report_json(const GateReport& report) {
  std::ostringstream json;
  json << "{\n"
       << "  \"fidelity\": " << format_g12(report.fidelity) << ",\n"
       << "  \"infidelity\": " << format_g12(1.0 - report.fidelity) << ",\n"
       << "  \"tip_angle\": " << format_g12(report.tip_angle) << ",\n"
       << "  \"repetitions\": " << report.repetitions << ",\n"
       << "  \"subsequence_bits\": " << report.subsequence_bits << ",\n"
       << "  \"levels\": " << report.levels << ",\n"
       << "  \"gate_time_ns\": " << format_g12(report.gate_time_ns) << ",\n";
  json << "  \"qubit_block_re\": [["
       << format_g12(report.qubit_block(0, 0).real()) << ", "
       << format_g12(report.qubit_block(0, 1).real()) << "], ["
       << format_g12(report.qubit_block(1, 0).real()) << ", "
       << format_g12(report.qubit_block(1, 1).real()) << "]],\n";
  json << "  \"qubit_block_im\": [["
       << format_g12(report.qubit_block(0, 0).imag()) << ", "
       << format_g12(report.qubit_block(0, 1).imag()) << "], ["
       << format_g12(report.qubit_block(1, 0).imag()) << ", "
       << format_g12(report.qubit_block(1, 1).imag()) << "]],\n";
  json << "  \"peak_population\": [";
  for (int l = 0; l < report.levels; ++l) {
    if (l) json << ", ";
    json << format_g12(report.peak_population(l));
  }
  json << "],\n  \"boundary_population\": [";
  for (int l = 0; l < report.levels; ++l) {
    if (l) json << ", ";
    json << format_g12(report.boundary_population(l));
  }
  json << "]\n}\n";
  return json.str();
}

/// Long-format population trace: one row per (initial state, clock edge,
/// level).
inline void write_trace_csv(const std::filesystem::path& path,
                            const GateReport& report) {
  std::ostringstream csv;
  csv << "edge_index,time_ns,initial_state,level,population\n";
  for (int a = 0; a < 6; ++a) {
    const Eigen::MatrixXd& pop = report.populations[a];
    for (int j = 0; j < pop.rows(); ++j) {
      for (int l = 0; l < pop.cols(); ++l) {
        csv << j << ',' << format_g12(report.times_ns[j]) << ','
            << kCardinalLabels[a] << ',' << l << ','
            << format_g12(pop(j, l)) << "\n";
      }
    }
  }
  write_text_file(path, csv.str());
}

inline void write_grid_csv(const std::filesystem::path& path,
                           const std::vector<GridPoint>& points) {
  std::ostringstream csv;
  csv << "N_q,N_c,f_q_ghz,gate_time_ns\n";
  for (const GridPoint& p : points) {
    csv << p.qubit_cycles << ',' << p.clock_cycles << ','
        << format_g12(p.qubit_frequency_ghz) << ','
        << format_g12(p.gate_time_ns) << "\n";
  }
  write_text_file(path, csv.str());
}

}  // namespace scallop

#endif  // SCALLOP_IO_HPP
