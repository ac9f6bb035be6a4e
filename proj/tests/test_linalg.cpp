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

#include "doctest.h"

#include "cpf/config.hpp"
#include "cpf/linalg.hpp"
#include "test_support.hpp"

using namespace cpf;
using namespace cpf::testing;

namespace {

DensityMatrix basis_state(std::size_t dim, std::size_t index) {
  ComplexMatrix m(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix plus_state() {
  ComplexMatrix m(2, 2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 0.5;
  return DensityMatrix(std::move(m));
}

DensityMatrix maximally_mixed(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / dim;
  return DensityMatrix(std::move(m));
}

}  // namespace

TEST_CASE("eigh reproduces a known 2x2 spectrum and reconstructs the input") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(0, 1) = {0, 1};
  m(1, 0) = {0, -1};
  m(1, 1) = 1.0;
  const EighResult e = eigh(m);
  CHECK(std::abs(e.values[0] - 0.0) < 1e-14);
  CHECK(std::abs(e.values[1] - 2.0) < 1e-14);

  ComplexMatrix scaled = e.vectors;
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t r = 0; r < 2; ++r) scaled(r, c) *= e.values[c];
  }
  const ComplexMatrix rebuilt =
      kernels::matmul_adjoint_rhs(scaled, e.vectors);
  CHECK(rebuilt.max_abs_diff(m) < 1e-14);
}

TEST_CASE("sqrtm_psd basics") {
  const ComplexMatrix eye = ComplexMatrix::identity(3);
  CHECK(sqrtm_psd(eye).max_abs_diff(eye) < 1e-14);

  ComplexMatrix d(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  ComplexMatrix expected(2, 2);
  expected(0, 0) = 2.0;
  expected(1, 1) = 3.0;
  CHECK(sqrtm_psd(d).max_abs_diff(expected) < 1e-14);
}

TEST_CASE("sqrtm_psd reconstruction on random PSD matrices") {
  auto rng = make_rng(42);
  for (std::size_t dim : {2u, 3u, 8u, 17u}) {
    const DensityMatrix rho = random_density(dim, rng);
    const ComplexMatrix s = sqrtm_psd(rho.matrix());
    CHECK(s.hermiticity_defect() < 1e-12);
    CHECK(kernels::matmul(s, s).max_abs_diff(rho.matrix()) < 1e-9);
  }
}

TEST_CASE("sqrtm_psd input validation") {
  ComplexMatrix bad(2, 2);
  bad(0, 1) = 0.5;  // not Hermitian
  CHECK_THROWS_WITH_AS((void)sqrtm_psd(bad), "not Hermitian",
                       std::invalid_argument);

  ComplexMatrix neg(2, 2);
  neg(0, 0) = 1.0;
  neg(1, 1) = -0.5;
  CHECK_THROWS_WITH_AS((void)sqrtm_psd(neg), "not PSD", std::invalid_argument);
}

TEST_CASE("density matrix invariants are enforced") {
  ComplexMatrix not_herm(2, 2);
  not_herm(0, 0) = 0.5;
  not_herm(1, 1) = 0.5;
  not_herm(0, 1) = {0.1, 0.0};
  not_herm(1, 0) = {0.2, 0.0};
  CHECK_THROWS_AS((void)DensityMatrix(not_herm), std::invalid_argument);

  ComplexMatrix bad_trace(2, 2);
  bad_trace(0, 0) = 0.7;
  bad_trace(1, 1) = 0.7;
  CHECK_THROWS_AS((void)DensityMatrix(bad_trace), std::invalid_argument);

  ComplexMatrix not_psd(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS((void)DensityMatrix(not_psd), std::invalid_argument);

  CHECK_THROWS_AS((void)PureState(2, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("tensor products") {
  const DensityMatrix zero = basis_state(2, 0);
  const DensityMatrix zz = tensor(zero, zero);
  CHECK(zz.dim() == 4);
  CHECK(std::abs(zz(0, 0) - complex_t{1, 0}) < 1e-15);

  const DensityMatrix mixed = maximally_mixed(2);
  const DensityMatrix quarter = tensor(mixed, mixed);
  CHECK(quarter.matrix().max_abs_diff(maximally_mixed(4).matrix()) < 1e-15);

  auto rng = make_rng(5);
  const DensityMatrix a = random_density(3, rng);
  const DensityMatrix b = random_density(4, rng);
  CHECK(std::abs(tensor(a, b).matrix().trace() - complex_t{1, 0}) < 1e-12);
}

TEST_CASE("tensor rejects products beyond the dimension cap") {
  const DensityMatrix big = maximally_mixed(128);
  CHECK(dimension_cap() == 4096);
  CHECK_THROWS_WITH_AS((void)tensor(big, big), "dimension limit",
                       std::invalid_argument);
}

TEST_CASE("fidelity on known states") {
  const DensityMatrix zero = basis_state(2, 0);
  const DensityMatrix one = basis_state(2, 1);
  CHECK(fidelity(zero, zero) == 1.0);
  CHECK(fidelity(zero, one) == 0.0);
  CHECK(std::abs(fidelity(zero, plus_state()) - 1.0 / std::sqrt(2.0)) < 1e-10);

  auto rng = make_rng(8);
  const DensityMatrix rho = random_density(5, rng);
  CHECK(std::abs(fidelity(rho, rho) - 1.0) < 1e-10);

  const DensityMatrix other = maximally_mixed(3);
  CHECK_THROWS_AS((void)fidelity(rho, other), std::invalid_argument);
}

TEST_CASE("fidelity is symmetric and matches pure-state overlaps") {
  auto rng = make_rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = random_density(4, rng);
    const DensityMatrix sigma = random_density(4, rng);
    CHECK(std::abs(fidelity(rho, sigma) - fidelity(sigma, rho)) < 1e-10);

    const PureState psi = random_pure(4, rng);
    const PureState phi = random_pure(4, rng);
    complex_t overlap = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      overlap += std::conj(psi[i]) * phi[i];
    }
    CHECK(std::abs(fidelity(density(psi), density(phi)) - std::abs(overlap)) <
          1e-10);
  }
}

TEST_CASE("fidelity is invariant under a common unitary") {
  auto rng = make_rng(33);
  for (int rep = 0; rep < 5; ++rep) {
    const DensityMatrix rho = random_density(5, rng);
    const DensityMatrix sigma = random_density(5, rng);
    const ComplexMatrix u = random_unitary(5, rng);
    CHECK(std::abs(fidelity(conjugate(u, rho), conjugate(u, sigma)) -
                   fidelity(rho, sigma)) < 1e-9);
  }
}

TEST_CASE("trace distance basics and the Fuchs-van de Graaf window") {
  const DensityMatrix zero = basis_state(2, 0);
  const DensityMatrix one = basis_state(2, 1);
  CHECK(trace_distance(zero, zero) == 0.0);
  CHECK(std::abs(trace_distance(zero, one) - 1.0) < 1e-14);

  auto rng = make_rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = random_density(4, rng);
    const DensityMatrix sigma = random_density(4, rng);
    const double f = fidelity(rho, sigma);
    const double t = trace_distance(rho, sigma);
    CHECK(t >= 1.0 - f - 1e-9);
    CHECK(t <= std::sqrt(std::max(0.0, 1.0 - f * f)) + 1e-9);
  }
}

TEST_CASE("trace distance satisfies the triangle inequality") {
  auto rng = make_rng(66);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix a = random_density(4, rng);
    const DensityMatrix b = random_density(4, rng);
    const DensityMatrix c = random_density(4, rng);
    CHECK(trace_distance(a, c) <=
          trace_distance(a, b) + trace_distance(b, c) + 1e-10);
  }
}
