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

#include <string>
#include <variant>

namespace cpf {

/// Damping rate gamma in [0, 1]. gamma = 0 is the identity channel; detector
/// inefficiency maps to gamma = 1 - eta.
struct DampingRate {
  double gamma;
  explicit DampingRate(double g);
};

struct CoherentSource {
  double n_bar = 1.0;  // mean photon number
  int n_max = 30;      // Fock-space truncation
};
struct FockSource {};
struct GhzSource {
  int n_parties;
};
struct GenBipartiteSource {
  double a;  // 1/2 is a Bell pair, 0 a bare single-photon signal
};
struct BiphotonSiSource {};
struct BiphotonIfSource {};

using SourceKind = std::variant<CoherentSource, FockSource, GhzSource,
                                GenBipartiteSource, BiphotonSiSource,
                                BiphotonIfSource>;

std::string source_name(const SourceKind& source);
void validate_source(const SourceKind& source);

/// One channel position finding experiment: N boxes probed M times each,
/// a target channel ADC(gamma1) hidden among reference channels ADC(gamma0).
struct CpfScenario {
  int n_boxes;
  int m_uses;
  DampingRate gamma0;  // reference channel
  DampingRate gamma1;  // target channel
  SourceKind source;

  CpfScenario(int n_boxes, int m_uses, DampingRate gamma0, DampingRate gamma1,
              SourceKind source);
};

}  // namespace cpf
