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

#include <cstddef>

namespace cpf {

/// All numerical tolerances used across the library, in one place.
struct Tolerances {
  double density_hermiticity = 1e-12;  // max |rho - rho^dag| entry
  double unit_trace = 1e-10;           // |Tr rho - 1|
  double psd = 1e-10;                  // eigenvalues >= -psd admitted, clipped to 0
  double sqrt_hermiticity = 1e-10;     // Hermiticity tolerance for sqrtm_psd input
  double kraus_completeness = 1e-10;   // max |sum K^dag K - I| entry
  double state_norm = 1e-12;           // | ||psi||^2 - 1 |
  double fidelity_boundary = 1e-10;    // clamp fidelity to [0,1] within this
  // Relative cutoff below which eigenvalues of sqrt(rho) sigma sqrt(rho) are
  // treated as exact zeros. Rounding turns true zeros into O(eps) values whose
  // square roots would otherwise pollute the fidelity at the 1e-8 level.
  double fidelity_eigen_rel_cutoff = 1e-13;
  double coherent_tail = 1e-8;         // max admissible truncated Poisson tail
};

const Tolerances& tolerances();

/// Maximum Hilbert-space dimension (default 4096, i.e. 12 qubits).
/// Overridable through the CPF_MAX_DIM environment variable.
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);

}  // namespace cpf
