// Copyright 2026 The cpfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpf/receiver.hpp"
#include "cpf/scenario.hpp"

namespace cpf {

/// Invalid configuration or sweep specification (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Filesystem failure (CLI exit code 3).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SweepAxis { Uses, Gamma0, Gamma1, Boxes, Purity };
std::string axis_name(SweepAxis axis);            // "M", "gamma0", ...
SweepAxis axis_from_name(const std::string& name);

enum class OutputKind {
  Bounds,
  ReceiverAnalytic,
  ReceiverMc,
  Fidelity,
  TraceDistance,
};
std::string output_name(OutputKind kind);
OutputKind output_from_name(const std::string& name);

struct SweepSpec {
  CpfScenario scenario;  // template; the axis field is replaced per point
  SweepAxis axis;
  std::vector<double> axis_values;  // non-empty, strictly increasing
  std::vector<OutputKind> outputs;
  std::string tag;  // optional metric suffix, e.g. "gamma1=0.55"
};

struct RunOptions {
  std::uint64_t seed = 42;
  long long trials = 20000;
  ClickModel click_model = ClickModel::ExactlyOne;
};

struct CsvRow {
  double axis;
  std::string source;
  std::string metric;
  double value;
};

/// Throws ConfigError on any invalid spec (bad axis values, incompatible
/// axis/source/output combinations).
void validate_sweep(const SweepSpec& spec);

/// Scenario at one axis point.
CpfScenario scenario_at(const SweepSpec& spec, double axis_value);

std::vector<CsvRow> run_sweep(const SweepSpec& spec, const RunOptions& options,
                              std::uint64_t mc_salt = 0);

struct Preset {
  std::string name;
  std::string description;
  std::vector<SweepSpec> sweeps;
};

const std::vector<std::string>& preset_names();
Preset make_preset(const std::string& name);  // ConfigError if unknown

std::vector<CsvRow> run_preset(const Preset& preset, const RunOptions& options);

/// Advantage lines: for every quantum sweep with bounds, where the quantum
/// upper bound drops below the coherent-benchmark lower bound (n_bar = 1) at
/// matched parameters; for fock receiver sweeps, where the receiver error
/// does the same.
std::vector<std::string> preset_summary(const Preset& preset,
                                        const RunOptions& options);

/// Rows sorted by (source, metric, axis); floats with 12 significant digits.
/// Header: axis,source,metric,value
void write_csv(const std::vector<CsvRow>& rows, std::ostream& out);
void write_csv_file(const std::vector<CsvRow>& rows, const std::string& path);

struct VerdictReport {
  double quantum_upper;
  double classical_lower;
  bool advantage;     // quantum_upper < classical_lower at the given M
  int minimal_m;      // smallest M <= m_max with an advantage, -1 if none
  int m_max;
};

VerdictReport verdict(const CpfScenario& scenario, int m_max = 200);

/// Parse a sweep config JSON document:
/// { "scenario": {...}, "sweep_axis": "M", "axis_values": [...],
///   "outputs": [...], optional "seed", "trials", "click_model" }
SweepSpec sweep_from_json_text(const std::string& text);
RunOptions options_from_json_text(const std::string& text,
                                  RunOptions defaults);

}  // namespace cpf
