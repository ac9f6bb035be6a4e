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

#include <span>

#include "cpf/matrix.hpp"

// Data-parallel kernels. The default entry points are OpenMP-parallel;
// kernels::serial holds the plain reference implementations, kept both as
// test oracles and for the benchmark target. Parallel and serial variants
// accumulate in identical order, so their results are bitwise equal.
namespace cpf::kernels {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b^dagger without materializing the adjoint.
ComplexMatrix matmul_adjoint_rhs(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// sum_k K_k rho K_k^dagger over full-dimension Kraus operators.
ComplexMatrix kraus_apply(std::span<const ComplexMatrix> ops,
                          const ComplexMatrix& rho);

/// Single-qubit Kraus channel acting on qubit `qubit` of an n-qubit density
/// matrix, evaluated through index arithmetic in O(4^n) instead of dense
/// products. Qubit 0 is the leftmost tensor factor (most significant bit).
ComplexMatrix apply_single_qubit_kraus(const ComplexMatrix& rho,
                                       std::span<const ComplexMatrix> ops,
                                       std::size_t qubit,
                                       std::size_t n_qubits);

namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_adjoint_rhs(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kraus_apply(std::span<const ComplexMatrix> ops,
                          const ComplexMatrix& rho);
ComplexMatrix apply_single_qubit_kraus(const ComplexMatrix& rho,
                                       std::span<const ComplexMatrix> ops,
                                       std::size_t qubit,
                                       std::size_t n_qubits);

}  // namespace serial

}  // namespace cpf::kernels
