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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cpf/analytics.hpp"
#include "cpf/config.hpp"
#include "cpf/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

cpf::ClickModel parse_click_model(const std::string& name) {
  if (name == "exactly_one") return cpf::ClickModel::ExactlyOne;
  if (name == "at_least_one") return cpf::ClickModel::AtLeastOne;
  throw cpf::ConfigError("unknown click model: " + name);
}

cpf::SourceKind parse_source(const std::string& name, double a, double n_bar,
                             int n_max, int n_boxes) {
  if (name == "coherent") return cpf::CoherentSource{n_bar, n_max};
  if (name == "fock") return cpf::FockSource{};
  if (name == "ghz") return cpf::GhzSource{n_boxes};
  if (name == "gen_bipartite") return cpf::GenBipartiteSource{a};
  if (name == "biphoton_si") return cpf::BiphotonSiSource{};
  if (name == "biphoton_if") return cpf::BiphotonIfSource{};
  throw cpf::ConfigError("unknown source: " + name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cpf::IoError("cannot read: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_preset_command(const std::string& preset_name, const std::string& out,
                       const cpf::RunOptions& options) {
  const cpf::Preset preset = cpf::make_preset(preset_name);
  const auto rows = cpf::run_preset(preset, options);
  cpf::write_csv_file(rows, out);
  std::cout << preset.name << ": " << preset.description << "\n";
  std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  for (const auto& line : cpf::preset_summary(preset, options)) {
    std::cout << line << "\n";
  }
  return kExitOk;
}

int run_sweep_command(const std::string& config_path, const std::string& out,
                      cpf::RunOptions options, bool seed_set, bool trials_set) {
  const std::string text = read_file(config_path);
  cpf::RunOptions file_options =
      cpf::options_from_json_text(text, cpf::RunOptions{});
  // flags override config
  if (!seed_set) options.seed = file_options.seed;
  if (!trials_set) options.trials = file_options.trials;
  options.click_model = file_options.click_model;
  const cpf::SweepSpec spec = cpf::sweep_from_json_text(text);
  const auto rows = cpf::run_sweep(spec, options);
  if (out.empty()) {
    cpf::write_csv(rows, std::cout);
  } else {
    cpf::write_csv_file(rows, out);
    std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  }
  return kExitOk;
}

int run_verdict_command(const cpf::CpfScenario& scenario, int m_max) {
  const cpf::VerdictReport report = cpf::verdict(scenario, m_max);
  std::printf("source:            %s\n",
              cpf::source_name(scenario.source).c_str());
  std::printf("N=%d M=%d gamma0=%g gamma1=%g\n", scenario.n_boxes,
              scenario.m_uses, scenario.gamma0.gamma, scenario.gamma1.gamma);
  std::printf("quantum upper:     %.12g\n", report.quantum_upper);
  std::printf("coherent lower:    %.12g\n", report.classical_lower);
  std::printf("advantage:         %s\n", report.advantage ? "yes" : "no");
  if (report.minimal_m >= 0) {
    std::printf("minimal M:         %d\n", report.minimal_m);
  } else {
    std::printf("minimal M:         none found up to M_max=%d\n", report.m_max);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"channel position finding bounds and receiver simulation"};
  app.require_subcommand(1);

  std::string preset_name, out_path, config_path;
  std::uint64_t seed = 42;
  long long trials = 20000;
  std::string click_model = "exactly_one";

  auto* run = app.add_subcommand("run", "run a built-in figure preset");
  run->add_option("--preset", preset_name, "preset name")
      ->required()
      ->check(CLI::IsMember(cpf::preset_names()));
  run->add_option("--out", out_path, "output CSV path")->required();
  run->add_option("--seed", seed, "Monte Carlo master seed");
  run->add_option("--trials", trials, "Monte Carlo trials per point")
      ->check(CLI::PositiveNumber);
  run->add_option("--click-model", click_model,
                  "exactly_one | at_least_one");

  auto* sweep = app.add_subcommand("sweep", "run a sweep from a JSON config");
  sweep->add_option("--config", config_path, "JSON config path")->required();
  sweep->add_option("--out", out_path, "output CSV path (default: stdout)");
  auto* sweep_seed = sweep->add_option("--seed", seed, "Monte Carlo seed");
  auto* sweep_trials =
      sweep->add_option("--trials", trials, "Monte Carlo trials per point")
          ->check(CLI::PositiveNumber);

  std::string source_name = "fock";
  int n_boxes = 4, m_uses = 1, m_max = 200, n_max = 30;
  double gamma0 = 0.0, gamma1 = 0.0, a = 0.5, n_bar = 1.0;
  auto* ver = app.add_subcommand(
      "verdict", "compare a quantum source against the coherent benchmark");
  ver->add_option("--source", source_name, "source kind")->required();
  ver->add_option("--n", n_boxes, "number of boxes")->required();
  ver->add_option("--m", m_uses, "number of uses")->required();
  ver->add_option("--gamma0", gamma0, "reference damping rate")->required();
  ver->add_option("--gamma1", gamma1, "target damping rate")->required();
  ver->add_option("--a", a, "gen_bipartite weight");
  ver->add_option("--nbar", n_bar, "coherent mean photon number");
  ver->add_option("--nmax", n_max, "coherent Fock truncation");
  ver->add_option("--mmax", m_max, "search limit for the minimal M");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    cpf::RunOptions options;
    options.seed = seed;
    options.trials = trials;
    options.click_model = parse_click_model(click_model);

    if (run->parsed()) {
      return run_preset_command(preset_name, out_path, options);
    }
    if (sweep->parsed()) {
      return run_sweep_command(config_path, out_path, options,
                               !sweep_seed->empty(), !sweep_trials->empty());
    }
    cpf::CpfScenario scenario(
        n_boxes, m_uses, cpf::DampingRate(gamma0), cpf::DampingRate(gamma1),
        parse_source(source_name, a, n_bar, n_max, n_boxes));
    return run_verdict_command(scenario, m_max);
  } catch (const cpf::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const cpf::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
