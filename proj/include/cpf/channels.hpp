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

#include <vector>

#include "cpf/linalg.hpp"
#include "cpf/scenario.hpp"

namespace cpf {

/// Completely positive trace-preserving map in Kraus form:
/// rho -> sum_k K_k rho K_k^dagger with sum_k K_k^dagger K_k = I.
class KrausChannel {
 public:
  KrausChannel(std::size_t dim, std::vector<ComplexMatrix> ops);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> ops_;
};

/// Amplitude damping channel {|0><0| + sqrt(1-g)|1><1|, sqrt(g)|0><1|}.
/// Only qubits are supported.
KrausChannel adc(DampingRate gamma, std::size_t dim = 2);

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Tensor the channel with identities so it acts on subsystem `position`
/// of `total_subsystems` equal-dimension subsystems.
KrausChannel lift(const KrausChannel& ch, std::size_t position,
                  std::size_t total_subsystems, std::size_t subsystem_dim);

/// Global CPF channel: an independent ADC on every qubit, held as the list
/// of per-qubit rates rather than the materialized product Kraus set (which
/// has 2^n operators). apply() runs the stages through the single-qubit
/// kernel; to_kraus() materializes the product set for small n.
class CpfChannel {
 public:
  explicit CpfChannel(std::vector<DampingRate> qubit_rates);

  std::size_t n_qubits() const { return rates_.size(); }
  const std::vector<DampingRate>& qubit_rates() const { return rates_; }

  DensityMatrix apply(const DensityMatrix& rho) const;
  KrausChannel to_kraus() const;

 private:
  std::vector<DampingRate> rates_;
};

/// Wiring of the global channel for one protocol use, by source kind:
///   fock / ghz      one qubit per box; ADC(gamma1) on the target box
///   gen_bipartite / biphoton_si
///                   signal+idler qubit per box; ADC on signals only
///   biphoton_if     one qubit per box, probed in adjacent pairs; the target
///                   pair gets rates (gamma1, gamma0), the rest (gamma0, gamma0)
/// Coherent sources have no qubit wiring (they are handled in closed form and
/// by truncated-Fock numerics) and are rejected.
CpfChannel cpf_channel(const CpfScenario& scenario, int target_box);

}  // namespace cpf
