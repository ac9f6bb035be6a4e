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

#include "cpf/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cpf/analytics.hpp"

#include "json.hpp"

namespace cpf {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool is_integral(double v) { return v == std::floor(v); }

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string metric_label(const std::string& base, const std::string& tag) {
  return tag.empty() ? base : base + "(" + tag + ")";
}

bool wants(const SweepSpec& spec, OutputKind kind) {
  return std::find(spec.outputs.begin(), spec.outputs.end(), kind) !=
         spec.outputs.end();
}

CpfScenario coherent_benchmark(const CpfScenario& sc) {
  return CpfScenario(sc.n_boxes, sc.m_uses, sc.gamma0, sc.gamma1,
                     CoherentSource{1.0, 30});
}

std::vector<double> range_values(double first, double last, double step) {
  std::vector<double> v;
  for (double x = first; x <= last + 0.5 * step; x += step) {
    v.push_back(std::min(x, last));
  }
  return v;
}

std::vector<double> int_values(int first, int last) {
  std::vector<double> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

}  // namespace

std::string axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Uses: return "M";
    case SweepAxis::Gamma0: return "gamma0";
    case SweepAxis::Gamma1: return "gamma1";
    case SweepAxis::Boxes: return "N";
    case SweepAxis::Purity: return "a";
  }
  throw std::logic_error("unknown axis");
}

SweepAxis axis_from_name(const std::string& name) {
  if (name == "M") return SweepAxis::Uses;
  if (name == "gamma0") return SweepAxis::Gamma0;
  if (name == "gamma1") return SweepAxis::Gamma1;
  if (name == "N") return SweepAxis::Boxes;
  if (name == "a") return SweepAxis::Purity;
  throw ConfigError("unknown sweep axis: " + name);
}

std::string output_name(OutputKind kind) {
  switch (kind) {
    case OutputKind::Bounds: return "bounds";
    case OutputKind::ReceiverAnalytic: return "receiver_analytic";
    case OutputKind::ReceiverMc: return "receiver_mc";
    case OutputKind::Fidelity: return "fidelity";
    case OutputKind::TraceDistance: return "trace_distance";
  }
  throw std::logic_error("unknown output kind");
}

OutputKind output_from_name(const std::string& name) {
  if (name == "bounds") return OutputKind::Bounds;
  if (name == "receiver_analytic") return OutputKind::ReceiverAnalytic;
  if (name == "receiver_mc") return OutputKind::ReceiverMc;
  if (name == "fidelity") return OutputKind::Fidelity;
  if (name == "trace_distance") return OutputKind::TraceDistance;
  throw ConfigError("unknown output kind: " + name);
}

void validate_sweep(const SweepSpec& spec) {
  if (spec.axis_values.empty()) {
    throw ConfigError("axis_values must be non-empty");
  }
  for (std::size_t i = 1; i < spec.axis_values.size(); ++i) {
    if (!(spec.axis_values[i] > spec.axis_values[i - 1])) {
      throw ConfigError("axis_values must be strictly increasing");
    }
  }
  if (spec.outputs.empty()) throw ConfigError("outputs must be non-empty");
  if (spec.axis == SweepAxis::Purity &&
      !std::holds_alternative<GenBipartiteSource>(spec.scenario.source)) {
    throw ConfigError("axis 'a' requires a gen_bipartite source");
  }
  const bool receiver = wants(spec, OutputKind::ReceiverAnalytic) ||
                        wants(spec, OutputKind::ReceiverMc);
  if (receiver &&
      !std::holds_alternative<CoherentSource>(spec.scenario.source) &&
      !std::holds_alternative<FockSource>(spec.scenario.source)) {
    throw ConfigError("receiver outputs require a coherent or fock source");
  }
  // Every axis point must yield a constructible scenario.
  for (double v : spec.axis_values) (void)scenario_at(spec, v);
}

CpfScenario scenario_at(const SweepSpec& spec, double value) {
  const CpfScenario& base = spec.scenario;
  try {
    switch (spec.axis) {
      case SweepAxis::Uses:
        if (!is_integral(value) || value < 0) {
          throw ConfigError("M values must be non-negative integers");
        }
        return CpfScenario(base.n_boxes, static_cast<int>(value), base.gamma0,
                           base.gamma1, base.source);
      case SweepAxis::Boxes: {
        if (!is_integral(value) || value < 2) {
          throw ConfigError("N values must be integers >= 2");
        }
        const int n = static_cast<int>(value);
        SourceKind src = base.source;
        if (auto* g = std::get_if<GhzSource>(&src)) g->n_parties = n;
        return CpfScenario(n, base.m_uses, base.gamma0, base.gamma1, src);
      }
      case SweepAxis::Gamma0:
        return CpfScenario(base.n_boxes, base.m_uses, DampingRate(value),
                           base.gamma1, base.source);
      case SweepAxis::Gamma1:
        return CpfScenario(base.n_boxes, base.m_uses, base.gamma0,
                           DampingRate(value), base.source);
      case SweepAxis::Purity: {
        SourceKind src = GenBipartiteSource{value};
        return CpfScenario(base.n_boxes, base.m_uses, base.gamma0, base.gamma1,
                           src);
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid axis point ") + fmt12(value) +
                      ": " + e.what());
  }
  throw std::logic_error("unknown axis");
}

std::vector<CsvRow> run_sweep(const SweepSpec& spec, const RunOptions& options,
                              std::uint64_t mc_salt) {
  validate_sweep(spec);
  std::vector<CsvRow> rows;
  const std::string src = source_name(spec.scenario.source);
  for (std::size_t i = 0; i < spec.axis_values.size(); ++i) {
    const double v = spec.axis_values[i];
    const CpfScenario sc = scenario_at(spec, v);
    for (OutputKind kind : spec.outputs) {
      switch (kind) {
        case OutputKind::Bounds: {
          const BoundsResult b = bounds_for_scenario(sc);
          rows.push_back({v, src, metric_label("bound_lower", spec.tag), b.lower});
          rows.push_back({v, src, metric_label("bound_upper", spec.tag), b.upper});
          break;
        }
        case OutputKind::Fidelity:
          rows.push_back({v, src, metric_label("fidelity", spec.tag),
                          scenario_fidelity(sc)});
          break;
        case OutputKind::TraceDistance:
          rows.push_back({v, src, metric_label("trace_distance", spec.tag),
                          scenario_trace_distance(sc)});
          break;
        case OutputKind::ReceiverAnalytic: {
          const ReceiverModel model = receiver_model(sc, options.click_model);
          const double perr =
              1.0 - p_success_minmax(sc.n_boxes, sc.m_uses, model);
          rows.push_back(
              {v, src, metric_label("receiver_p_err", spec.tag), perr});
          break;
        }
        case OutputKind::ReceiverMc: {
          const ReceiverModel model = receiver_model(sc, options.click_model);
          const std::uint64_t point_seed =
              mix64(options.seed ^ mix64((mc_salt << 32) ^ i));
          const SimResult sim = simulate_receiver(sc.n_boxes, sc.m_uses, model,
                                                  options.trials, point_seed);
          rows.push_back({v, src, metric_label("receiver_p_err_mc", spec.tag),
                          sim.p_err_estimate});
          rows.push_back({v, src, metric_label("receiver_mc_std_error", spec.tag),
                          sim.std_error});
          break;
        }
      }
    }
  }
  return rows;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "fig2", "fig3i", "fig3ii", "fig4i", "fig4ii", "fig5", "fig6i", "fig6ii"};
  return names;
}

namespace {

SweepSpec bounds_sweep(SourceKind source, int n_boxes, double g0, double g1,
                       int m_first, int m_last) {
  return SweepSpec{
      CpfScenario(n_boxes, m_first, DampingRate(g0), DampingRate(g1),
                  std::move(source)),
      SweepAxis::Uses, int_values(m_first, m_last), {OutputKind::Bounds}, ""};
}

Preset uses_preset(const std::string& name, const std::string& description,
                   double g0, double g1) {
  Preset p{name, description, {}};
  const int n = 4, m_first = 1, m_last = 30;
  p.sweeps.push_back(
      bounds_sweep(CoherentSource{1.0, 30}, n, g0, g1, m_first, m_last));
  p.sweeps.push_back(bounds_sweep(FockSource{}, n, g0, g1, m_first, m_last));
  p.sweeps.push_back(
      bounds_sweep(BiphotonSiSource{}, n, g0, g1, m_first, m_last));
  p.sweeps.push_back(
      bounds_sweep(BiphotonIfSource{}, n, g0, g1, m_first, m_last));
  p.sweeps.push_back(bounds_sweep(GhzSource{n}, n, g0, g1, m_first, m_last));
  return p;
}

Preset receiver_gamma_preset() {
  Preset p{"fig5",
           "photon-counting receiver vs bounds, N=10, M=10, gamma1=0, "
           "gamma0 swept",
           {}};
  const std::vector<OutputKind> outs = {OutputKind::Bounds,
                                        OutputKind::ReceiverAnalytic,
                                        OutputKind::ReceiverMc};
  for (SourceKind src :
       {SourceKind{CoherentSource{1.0, 30}}, SourceKind{FockSource{}}}) {
    p.sweeps.push_back(SweepSpec{
        CpfScenario(10, 10, DampingRate(0.5), DampingRate(0.0), src),
        SweepAxis::Gamma0, range_values(0.05, 0.95, 0.05), outs, ""});
  }
  return p;
}

Preset receiver_boxes_preset(const std::string& name, double g0) {
  Preset p{name,
           "photon-counting receiver vs bounds, M=100, gamma1=0.2, N swept",
           {}};
  const std::vector<OutputKind> outs = {OutputKind::Bounds,
                                        OutputKind::ReceiverAnalytic,
                                        OutputKind::ReceiverMc};
  for (SourceKind src :
       {SourceKind{CoherentSource{1.0, 30}}, SourceKind{FockSource{}}}) {
    p.sweeps.push_back(SweepSpec{
        CpfScenario(2, 100, DampingRate(g0), DampingRate(0.2), src),
        SweepAxis::Boxes, int_values(2, 30), outs, ""});
  }
  return p;
}

Preset fidelity_vs_purity_preset() {
  Preset p{"fig2",
           "fidelity and trace distance over a, gamma0 = gamma1 + 0.1",
           {}};
  const char* tags[] = {"gamma1=0.55", "gamma1=0.65", "gamma1=0.75",
                        "gamma1=0.85"};
  const double g1s[] = {0.55, 0.65, 0.75, 0.85};
  for (int i = 0; i < 4; ++i) {
    p.sweeps.push_back(SweepSpec{
        CpfScenario(4, 1, DampingRate(g1s[i] + 0.1), DampingRate(g1s[i]),
                    GenBipartiteSource{0.0}),
        SweepAxis::Purity, range_values(0.0, 1.0, 0.01),
        {OutputKind::Fidelity, OutputKind::TraceDistance}, tags[i]});
  }
  return p;
}

}  // namespace

Preset make_preset(const std::string& name) {
  if (name == "fig2") return fidelity_vs_purity_preset();
  if (name == "fig3i")
    return uses_preset(name, "bounds vs M, N=4, gamma1=0, gamma0=0.2", 0.2, 0.0);
  if (name == "fig3ii")
    return uses_preset(name, "bounds vs M, N=4, gamma1=0, gamma0=0.8", 0.8, 0.0);
  if (name == "fig4i")
    return uses_preset(name, "bounds vs M, N=4, gamma1=0.2, gamma0=0.21", 0.21,
                       0.2);
  if (name == "fig4ii")
    return uses_preset(name, "bounds vs M, N=4, gamma1=0.8, gamma0=0.81", 0.81,
                       0.8);
  if (name == "fig5") return receiver_gamma_preset();
  if (name == "fig6i") return receiver_boxes_preset(name, 0.8);
  if (name == "fig6ii") return receiver_boxes_preset(name, 0.3);
  throw ConfigError("unknown preset: " + name);
}

std::vector<CsvRow> run_preset(const Preset& preset,
                               const RunOptions& options) {
  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < preset.sweeps.size(); ++i) {
    auto sweep_rows = run_sweep(preset.sweeps[i], options, i + 1);
    rows.insert(rows.end(), sweep_rows.begin(), sweep_rows.end());
  }
  return rows;
}

std::vector<std::string> preset_summary(const Preset& preset,
                                        const RunOptions& options) {
  std::vector<std::string> lines;
  for (const SweepSpec& sweep : preset.sweeps) {
    const bool coherent =
        std::holds_alternative<CoherentSource>(sweep.scenario.source);
    const std::string src = source_name(sweep.scenario.source);
    const std::string ax = axis_name(sweep.axis);

    if (wants(sweep, OutputKind::Bounds) && !coherent) {
      std::vector<double> where;
      for (double v : sweep.axis_values) {
        const CpfScenario sc = scenario_at(sweep, v);
        const double uq = bounds_for_scenario(sc).upper;
        const double lc = bounds_for_scenario(coherent_benchmark(sc)).lower;
        if (uq < lc) where.push_back(v);
      }
      std::ostringstream os;
      os << src << ": quantum upper bound < coherent lower bound at "
         << where.size() << "/" << sweep.axis_values.size() << " points";
      if (!where.empty()) {
        os << " (" << ax << " in [" << fmt12(where.front()) << ", "
           << fmt12(where.back()) << "])";
      }
      lines.push_back(os.str());
    }

    if (wants(sweep, OutputKind::ReceiverAnalytic) && !coherent) {
      std::vector<double> where;
      for (double v : sweep.axis_values) {
        const CpfScenario sc = scenario_at(sweep, v);
        const ReceiverModel model = receiver_model(sc, options.click_model);
        const double perr = 1.0 - p_success_minmax(sc.n_boxes, sc.m_uses, model);
        const double lc = bounds_for_scenario(coherent_benchmark(sc)).lower;
        if (perr < lc) where.push_back(v);
      }
      std::ostringstream os;
      os << src << " receiver: error < coherent lower bound at "
         << where.size() << "/" << sweep.axis_values.size() << " points";
      if (!where.empty()) {
        os << " (" << ax << " in [" << fmt12(where.front()) << ", "
           << fmt12(where.back()) << "])";
      }
      lines.push_back(os.str());
    }
  }
  return lines;
}

void write_csv(const std::vector<CsvRow>& rows, std::ostream& out) {
  std::vector<const CsvRow*> sorted;
  sorted.reserve(rows.size());
  for (const auto& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CsvRow* a, const CsvRow* b) {
                     if (a->source != b->source) return a->source < b->source;
                     if (a->metric != b->metric) return a->metric < b->metric;
                     return a->axis < b->axis;
                   });
  out << "axis,source,metric,value\n";
  for (const CsvRow* r : sorted) {
    out << fmt12(r->axis) << ',' << r->source << ',' << r->metric << ','
        << fmt12(r->value) << '\n';
  }
}

void write_csv_file(const std::vector<CsvRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  write_csv(rows, out);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

VerdictReport verdict(const CpfScenario& scenario, int m_max) {
  if (m_max < 0) throw ConfigError("m_max must be >= 0");
  const double uq = bounds_for_scenario(scenario).upper;
  const double lc = bounds_for_scenario(coherent_benchmark(scenario)).lower;

  int minimal = -1;
  for (int m = 0; m <= m_max; ++m) {
    const CpfScenario sc(scenario.n_boxes, m, scenario.gamma0, scenario.gamma1,
                         scenario.source);
    if (bounds_for_scenario(sc).upper <
        bounds_for_scenario(coherent_benchmark(sc)).lower) {
      minimal = m;
      break;
    }
  }
  return {uq, lc, uq < lc, minimal, m_max};
}

namespace {

using nlohmann::json;

SourceKind source_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "coherent") {
    CoherentSource s;
    if (j.contains("n_bar")) s.n_bar = j.at("n_bar").get<double>();
    if (j.contains("n_max")) s.n_max = j.at("n_max").get<int>();
    return s;
  }
  if (kind == "fock") return FockSource{};
  if (kind == "ghz") {
    GhzSource s{j.value("n_parties", 0)};
    return s;
  }
  if (kind == "gen_bipartite") return GenBipartiteSource{j.at("a").get<double>()};
  if (kind == "biphoton_si") return BiphotonSiSource{};
  if (kind == "biphoton_if") return BiphotonIfSource{};
  throw ConfigError("unknown source kind: " + kind);
}

CpfScenario scenario_from_json(const json& j) {
  const int n = j.at("n_boxes").get<int>();
  SourceKind src = source_from_json(j.at("source"));
  if (auto* g = std::get_if<GhzSource>(&src); g && g->n_parties == 0) {
    g->n_parties = n;
  }
  return CpfScenario(n, j.at("m_uses").get<int>(),
                     DampingRate(j.at("gamma0").get<double>()),
                     DampingRate(j.at("gamma1").get<double>()), std::move(src));
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config is not valid JSON");
  return j;
}

}  // namespace

SweepSpec sweep_from_json_text(const std::string& text) {
  const json j = parse_text(text);
  try {
    SweepSpec spec{scenario_from_json(j.at("scenario")),
                   axis_from_name(j.at("sweep_axis").get<std::string>()),
                   j.at("axis_values").get<std::vector<double>>(),
                   {},
                   j.value("tag", "")};
    for (const auto& o : j.at("outputs")) {
      spec.outputs.push_back(output_from_name(o.get<std::string>()));
    }
    validate_sweep(spec);
    return spec;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
}

RunOptions options_from_json_text(const std::string& text,
                                  RunOptions defaults) {
  const json j = parse_text(text);
  try {
    if (j.contains("seed")) defaults.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) {
      defaults.trials = j.at("trials").get<long long>();
      if (defaults.trials < 1) throw ConfigError("trials must be >= 1");
    }
    if (j.contains("click_model")) {
      const std::string m = j.at("click_model").get<std::string>();
      if (m == "exactly_one") {
        defaults.click_model = ClickModel::ExactlyOne;
      } else if (m == "at_least_one") {
        defaults.click_model = ClickModel::AtLeastOne;
      } else {
        throw ConfigError("unknown click_model: " + m);
      }
    }
    return defaults;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
}

}  // namespace cpf
