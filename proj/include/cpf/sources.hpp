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

#include "cpf/channels.hpp"
#include "cpf/linalg.hpp"
#include "cpf/scenario.hpp"

namespace cpf {

/// Coherent state |alpha> with alpha = sqrt(n_bar) (phase 0), truncated to
/// Fock levels 0..n_max and renormalized. Rejects truncations whose Poisson
/// tail exceeds 1e-8.
PureState coherent_state(double n_bar, int n_max);

/// Single-photon qubit state |1>.
PureState fock_one();

/// (|0...0> + |1...1>)/sqrt(2) on n_parties qubits, 2 <= n_parties <= 12.
PureState ghz_state(int n_parties);

/// sqrt(a)|00> + sqrt(1-a)|11> as a (pure, rank-1) density operator.
DensityMatrix gen_bipartite(double a);

/// Two-mode frequency-entangled pair, encoded as the qubit Bell state
/// (|00> + |11>)/sqrt(2): qubit 0 = signal mode, qubit 1 = idler/second
/// signal mode.
PureState biphoton_bell();

/// Pure-loss (amplitude damping) channel on the truncated Fock space
/// {|0>, ..., |n_max>}: Kraus operators A_k with
///   A_k[n-k, n] = sqrt( C(n,k) (1-g)^(n-k) g^k ).
/// Completeness holds exactly on the truncated space.
KrausChannel bosonic_loss(DampingRate gamma, int n_max);

}  // namespace cpf
