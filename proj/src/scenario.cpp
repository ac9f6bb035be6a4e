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

#include "cpf/scenario.hpp"

#include <stdexcept>

namespace cpf {

namespace {

constexpr int kMaxGhzParties = 12;

}  // namespace

DampingRate::DampingRate(double g) : gamma(g) {
  if (!(g >= 0.0 && g <= 1.0)) {
    throw std::invalid_argument("damping rate must lie in [0, 1]");
  }
}

std::string source_name(const SourceKind& source) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentSource>) return "coherent";
        if constexpr (std::is_same_v<T, FockSource>) return "fock";
        if constexpr (std::is_same_v<T, GhzSource>) return "ghz";
        if constexpr (std::is_same_v<T, GenBipartiteSource>)
          return "gen_bipartite";
        if constexpr (std::is_same_v<T, BiphotonSiSource>) return "biphoton_si";
        if constexpr (std::is_same_v<T, BiphotonIfSource>) return "biphoton_if";
      },
      source);
}

void validate_source(const SourceKind& source) {
  if (const auto* c = std::get_if<CoherentSource>(&source)) {
    if (c->n_bar < 0.0) throw std::invalid_argument("n_bar must be >= 0");
    if (c->n_max < 8) throw std::invalid_argument("n_max must be >= 8");
  } else if (const auto* g = std::get_if<GhzSource>(&source)) {
    if (g->n_parties < 2 || g->n_parties > kMaxGhzParties) {
      throw std::invalid_argument("GHZ parties must lie in [2, 12]");
    }
  } else if (const auto* b = std::get_if<GenBipartiteSource>(&source)) {
    if (!(b->a >= 0.0 && b->a <= 1.0)) {
      throw std::invalid_argument("a must lie in [0, 1]");
    }
  }
}

CpfScenario::CpfScenario(int n_boxes_, int m_uses_, DampingRate gamma0_,
                         DampingRate gamma1_, SourceKind source_)
    : n_boxes(n_boxes_),
      m_uses(m_uses_),
      gamma0(gamma0_),
      gamma1(gamma1_),
      source(std::move(source_)) {
  if (n_boxes < 2) throw std::invalid_argument("n_boxes must be >= 2");
  if (m_uses < 0) throw std::invalid_argument("m_uses must be >= 0");
  validate_source(source);
  if (const auto* g = std::get_if<GhzSource>(&source)) {
    if (g->n_parties != n_boxes) {
      throw std::invalid_argument("GHZ parties must equal n_boxes");
    }
  }
  if (std::holds_alternative<BiphotonIfSource>(source)) {
    if (n_boxes % 2 != 0) throw std::invalid_argument("even N required");
    if (n_boxes < 4) {
      throw std::invalid_argument("idler-free protocol needs N >= 4");
    }
  }
}

}  // namespace cpf
