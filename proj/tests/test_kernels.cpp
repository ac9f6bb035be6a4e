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

#include "doctest.h"

#include "cpf/channels.hpp"
#include "cpf/kernels.hpp"
#include "test_support.hpp"

using namespace cpf;
using cpf::testing::make_rng;
using cpf::testing::random_gaussian_matrix;

TEST_CASE("matmul matches a hand-computed 2x2 product") {
  ComplexMatrix a(2, 2), b(2, 2);
  a(0, 0) = {1, 1};
  a(0, 1) = {0, 2};
  a(1, 0) = {3, 0};
  a(1, 1) = {0, -1};
  b(0, 0) = {2, 0};
  b(0, 1) = {0, 1};
  b(1, 0) = {1, 0};
  b(1, 1) = {1, 1};
  const ComplexMatrix c = kernels::matmul(a, b);
  CHECK(c(0, 0) == complex_t{2, 4});
  CHECK(c(0, 1) == complex_t{-3, 3});
  CHECK(c(1, 0) == complex_t{6, -1});
  CHECK(c(1, 1) == complex_t{1, 2});
}

TEST_CASE("parallel kernels are bitwise equal to the serial reference") {
  auto rng = make_rng(99);
  ComplexMatrix a = random_gaussian_matrix(37, rng);
  ComplexMatrix b = random_gaussian_matrix(37, rng);

  CHECK(kernels::matmul(a, b).max_abs_diff(kernels::serial::matmul(a, b)) ==
        0.0);
  CHECK(kernels::matmul_adjoint_rhs(a, b).max_abs_diff(
            kernels::serial::matmul_adjoint_rhs(a, b)) == 0.0);

  ComplexMatrix small_a = random_gaussian_matrix(5, rng);
  ComplexMatrix small_b = random_gaussian_matrix(7, rng);
  CHECK(kernels::kron(small_a, small_b)
            .max_abs_diff(kernels::serial::kron(small_a, small_b)) == 0.0);

  const KrausChannel ch = adc(DampingRate(0.4));
  const KrausChannel lifted = lift(ch, 1, 3, 2);
  auto rho = cpf::testing::random_density(8, rng);
  CHECK(kernels::kraus_apply(lifted.ops(), rho.matrix())
            .max_abs_diff(
                kernels::serial::kraus_apply(lifted.ops(), rho.matrix())) ==
        0.0);
  CHECK(kernels::apply_single_qubit_kraus(rho.matrix(), ch.ops(), 1, 3)
            .max_abs_diff(kernels::serial::apply_single_qubit_kraus(
                rho.matrix(), ch.ops(), 1, 3)) == 0.0);
}

TEST_CASE("matmul_adjoint_rhs equals matmul against the adjoint") {
  auto rng = make_rng(7);
  const ComplexMatrix a = random_gaussian_matrix(12, rng);
  const ComplexMatrix b = random_gaussian_matrix(12, rng);
  CHECK(kernels::matmul_adjoint_rhs(a, b).max_abs_diff(
            kernels::matmul(a, b.adjoint())) == 0.0);
}

TEST_CASE("kron basis case and index layout") {
  ComplexMatrix e0(2, 2);
  e0(0, 0) = 1.0;  // |0><0|
  const ComplexMatrix out = kernels::kron(e0, e0);
  CHECK(out.rows() == 4);
  CHECK(out.cols() == 4);
  CHECK(out(0, 0) == complex_t{1, 0});
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (r != 0 || c != 0) CHECK(out(r, c) == complex_t{0, 0});
    }
  }
  auto rng = make_rng(3);
  const ComplexMatrix a = random_gaussian_matrix(3, rng);
  const ComplexMatrix b = random_gaussian_matrix(4, rng);
  const ComplexMatrix k = kernels::kron(a, b);
  CHECK(k(1 * 4 + 2, 2 * 4 + 3) == a(1, 2) * b(2, 3));
}

TEST_CASE("single-qubit kernel agrees with the dense lifted channel") {
  auto rng = make_rng(11);
  const std::size_t n_qubits = 3;
  auto rho = cpf::testing::random_density(8, rng);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const KrausChannel ch = adc(DampingRate(0.3 + 0.2 * q));
    const KrausChannel lifted = lift(ch, q, n_qubits, 2);
    const ComplexMatrix fast =
        kernels::apply_single_qubit_kraus(rho.matrix(), ch.ops(), q, n_qubits);
    const ComplexMatrix dense =
        kernels::kraus_apply(lifted.ops(), rho.matrix());
    CHECK(fast.max_abs_diff(dense) < 1e-13);
  }
}

TEST_CASE("single-qubit kernel addresses the leftmost factor as qubit 0") {
  // |10><10| with full damping on qubit 0 must become |00><00|.
  ComplexMatrix m(4, 4);
  m(2, 2) = 1.0;  // |10> = index 2
  const KrausChannel ch = adc(DampingRate(1.0));
  const ComplexMatrix out =
      kernels::apply_single_qubit_kraus(m, ch.ops(), 0, 2);
  CHECK(std::abs(out(0, 0) - complex_t{1, 0}) < 1e-15);
  CHECK(std::abs(out(2, 2)) < 1e-15);
}

TEST_CASE("kernel argument validation") {
  ComplexMatrix a(2, 3), b(2, 3);
  CHECK_THROWS_AS((void)kernels::matmul(a, b), std::invalid_argument);
  const KrausChannel ch = adc(DampingRate(0.2));
  ComplexMatrix rho(4, 4);
  CHECK_THROWS_AS((void)kernels::apply_single_qubit_kraus(rho, ch.ops(), 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)kernels::apply_single_qubit_kraus(rho, ch.ops(), 0, 3),
                  std::invalid_argument);
}
