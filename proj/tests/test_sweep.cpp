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

#include <cmath>
#include <sstream>

#include "doctest.h"

#include "cpf/analytics.hpp"
#include "cpf/sweep.hpp"

using namespace cpf;

namespace {

SweepSpec small_fock_sweep() {
  return SweepSpec{
      CpfScenario(4, 1, DampingRate(0.2), DampingRate(0.0), FockSource{}),
      SweepAxis::Uses,
      {1, 2, 3},
      {OutputKind::Bounds},
      ""};
}

}  // namespace

TEST_CASE("axis and output names round-trip") {
  for (SweepAxis a : {SweepAxis::Uses, SweepAxis::Gamma0, SweepAxis::Gamma1,
                      SweepAxis::Boxes, SweepAxis::Purity}) {
    CHECK(axis_from_name(axis_name(a)) == a);
  }
  for (OutputKind o :
       {OutputKind::Bounds, OutputKind::ReceiverAnalytic, OutputKind::ReceiverMc,
        OutputKind::Fidelity, OutputKind::TraceDistance}) {
    CHECK(output_from_name(output_name(o)) == o);
  }
  CHECK_THROWS_AS((void)axis_from_name("q"), ConfigError);
  CHECK_THROWS_AS((void)output_from_name("plots"), ConfigError);
}

TEST_CASE("sweep validation") {
  SweepSpec spec = small_fock_sweep();
  spec.axis_values.clear();
  CHECK_THROWS_AS(validate_sweep(spec), ConfigError);

  spec = small_fock_sweep();
  spec.axis_values = {1, 1, 2};
  CHECK_THROWS_AS(validate_sweep(spec), ConfigError);

  spec = small_fock_sweep();
  spec.outputs.clear();
  CHECK_THROWS_AS(validate_sweep(spec), ConfigError);

  spec = small_fock_sweep();
  spec.axis = SweepAxis::Purity;
  CHECK_THROWS_AS(validate_sweep(spec), ConfigError);  // needs gen_bipartite

  spec = small_fock_sweep();
  spec.axis_values = {0.5, 1.5};
  CHECK_THROWS_AS(validate_sweep(spec), ConfigError);  // M must be integral

  SweepSpec ghz{
      CpfScenario(4, 1, DampingRate(0.2), DampingRate(0.0), GhzSource{4}),
      SweepAxis::Uses,
      {1, 2},
      {OutputKind::ReceiverAnalytic},
      ""};
  CHECK_THROWS_AS(validate_sweep(ghz), ConfigError);  // no receiver for GHZ
}

TEST_CASE("scenario_at applies the axis value") {
  SweepSpec spec = small_fock_sweep();
  CHECK(scenario_at(spec, 3).m_uses == 3);

  spec.axis = SweepAxis::Gamma0;
  CHECK(scenario_at(spec, 0.55).gamma0.gamma == 0.55);
  CHECK_THROWS_AS((void)scenario_at(spec, 1.2), ConfigError);

  SweepSpec ifspec{
      CpfScenario(4, 1, DampingRate(0.2), DampingRate(0.0), BiphotonIfSource{}),
      SweepAxis::Boxes,
      {4, 6},
      {OutputKind::Bounds},
      ""};
  CHECK(scenario_at(ifspec, 6).n_boxes == 6);
  CHECK_THROWS_AS((void)scenario_at(ifspec, 5), ConfigError);  // odd N

  SweepSpec ghz{
      CpfScenario(4, 2, DampingRate(0.2), DampingRate(0.0), GhzSource{4}),
      SweepAxis::Boxes,
      {2, 3, 5},
      {OutputKind::Bounds},
      ""};
  const CpfScenario sc = scenario_at(ghz, 5);
  CHECK(std::get<GhzSource>(sc.source).n_parties == 5);
}

TEST_CASE("run_sweep emits one row per point and metric") {
  const auto rows = run_sweep(small_fock_sweep(), RunOptions{});
  REQUIRE(rows.size() == 6);  // 3 points x {bound_lower, bound_upper}
  const CpfScenario sc(4, 2, DampingRate(0.2), DampingRate(0.0), FockSource{});
  const BoundsResult expect = bounds_for_scenario(sc);
  bool found = false;
  for (const auto& r : rows) {
    if (r.axis == 2 && r.metric == "bound_upper") {
      CHECK(std::abs(r.value - expect.upper) < 1e-15);
      found = true;
    }
    CHECK(r.source == "fock");
  }
  CHECK(found);
}

TEST_CASE("CSV output is sorted and reproducible byte for byte") {
  const Preset preset = make_preset("fig5");
  RunOptions opt;
  opt.trials = 2000;
  const auto rows = run_preset(preset, opt);
  // 19 points x 2 sources x (2 bounds + 1 analytic + 2 mc) = 190 rows
  CHECK(rows.size() == 190);

  std::ostringstream a, b;
  write_csv(rows, a);
  write_csv(run_preset(preset, opt), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, 24) == "axis,source,metric,value");

  // sorted by source, metric, axis
  std::istringstream in(a.str());
  std::string line, prev_key;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    const std::string key = line.substr(c1 + 1, c3 - c1 - 1);
    CHECK(prev_key <= key);
    prev_key = key;
  }
}

TEST_CASE("all presets build and validate") {
  for (const std::string& name : preset_names()) {
    const Preset p = make_preset(name);
    CHECK(!p.sweeps.empty());
    for (const auto& sweep : p.sweeps) validate_sweep(sweep);
  }
  CHECK_THROWS_AS((void)make_preset("fig9"), ConfigError);
}

TEST_CASE("verdict reproduces the minimal-M search") {
  const CpfScenario fock(4, 11, DampingRate(0.2), DampingRate(0.0),
                         FockSource{});
  const VerdictReport r = verdict(fock, 50);
  CHECK(r.advantage);
  CHECK(r.minimal_m == 11);
  CHECK(std::abs(r.quantum_upper - 0.25769803776) < 1e-12);

  const CpfScenario equal(4, 11, DampingRate(0.3), DampingRate(0.3),
                          FockSource{});
  const VerdictReport req = verdict(equal, 50);
  CHECK(!req.advantage);
  CHECK(req.minimal_m == -1);

  // advantage exists but not below this m_max
  const VerdictReport rshort = verdict(fock, 1);
  CHECK(rshort.minimal_m == -1);
}

TEST_CASE("JSON sweep configs") {
  const std::string good = R"({
    "scenario": {"n_boxes": 4, "m_uses": 1, "gamma0": 0.2, "gamma1": 0.0,
                 "source": {"kind": "fock"}},
    "sweep_axis": "M",
    "axis_values": [1, 2, 4],
    "outputs": ["bounds"],
    "seed": 7,
    "trials": 1000
  })";
  const SweepSpec spec = sweep_from_json_text(good);
  CHECK(spec.axis == SweepAxis::Uses);
  CHECK(spec.axis_values.size() == 3);
  CHECK(source_name(spec.scenario.source) == "fock");
  const RunOptions opt = options_from_json_text(good, RunOptions{});
  CHECK(opt.seed == 7);
  CHECK(opt.trials == 1000);

  CHECK_THROWS_AS((void)sweep_from_json_text("{not json"), ConfigError);
  CHECK_THROWS_AS((void)sweep_from_json_text(R"({"scenario": {}})"),
                  ConfigError);
  const std::string bad_kind = R"({
    "scenario": {"n_boxes": 4, "m_uses": 1, "gamma0": 0.2, "gamma1": 0.0,
                 "source": {"kind": "tmsv"}},
    "sweep_axis": "M", "axis_values": [1], "outputs": ["bounds"]
  })";
  CHECK_THROWS_AS((void)sweep_from_json_text(bad_kind), ConfigError);

  const std::string ghz = R"({
    "scenario": {"n_boxes": 6, "m_uses": 1, "gamma0": 0.2, "gamma1": 0.0,
                 "source": {"kind": "ghz"}},
    "sweep_axis": "M", "axis_values": [1, 3], "outputs": ["bounds", "fidelity"]
  })";
  const SweepSpec gspec = sweep_from_json_text(ghz);
  CHECK(std::get<GhzSource>(gspec.scenario.source).n_parties == 6);
}

TEST_CASE("unwritable output paths raise IoError") {
  CHECK_THROWS_AS(write_csv_file({}, "/nonexistent-dir/out.csv"), IoError);
}
