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

#include "cpf/channels.hpp"
#include "cpf/kernels.hpp"
#include "cpf/sources.hpp"
#include "test_support.hpp"

using namespace cpf;

namespace {

// Truncated Poisson tail mass for mean n_bar, levels above n_max.
double poisson_tail(double n_bar, int n_max) {
  double term = std::exp(-n_bar);
  double kept = term;
  for (int n = 1; n <= n_max; ++n) {
    term *= n_bar / n;
    kept += term;
  }
  return 1.0 - kept;
}

}  // namespace

TEST_CASE("coherent state amplitudes") {
  const PureState vac = coherent_state(0.0, 10);
  CHECK(std::abs(vac[0] - complex_t{1, 0}) < 1e-15);
  for (std::size_t i = 1; i < vac.dim(); ++i) CHECK(std::abs(vac[i]) == 0.0);

  const PureState alpha = coherent_state(1.0, 30);
  CHECK(std::abs(alpha[0] - std::exp(-0.5)) < 1e-12);

  double n_mean = 0.0, norm2 = 0.0;
  for (std::size_t n = 0; n < alpha.dim(); ++n) {
    n_mean += n * std::norm(alpha[n]);
    norm2 += std::norm(alpha[n]);
  }
  CHECK(std::abs(norm2 - 1.0) < 1e-14);
  CHECK(std::abs(n_mean - 1.0) < 1e-10);
}

TEST_CASE("coherent truncation error shrinks with n_max and is rejected when too large") {
  double prev = 1.0;
  for (int n_max = 8; n_max <= 13; ++n_max) {
    const double tail = poisson_tail(1.0, n_max);
    CHECK(tail > 0.0);
    CHECK(tail < prev);
    prev = tail;
  }
  CHECK(poisson_tail(1.0, 30) < 1e-12);
  // n_bar = 4 keeps ~2% of mass above level 8
  CHECK_THROWS_WITH_AS((void)coherent_state(4.0, 8), "increase truncation",
                       std::invalid_argument);
  CHECK_THROWS_AS((void)coherent_state(-1.0, 30), std::invalid_argument);
}

TEST_CASE("fock_one and its ADC image") {
  const PureState one = fock_one();
  CHECK(one.dim() == 2);
  CHECK(std::abs(one[0]) == 0.0);
  CHECK(std::abs(one[1] - complex_t{1, 0}) < 1e-15);

  const DensityMatrix out = apply(adc(DampingRate(0.3)), density(one));
  CHECK(std::abs(out(0, 0) - complex_t{0.3, 0}) < 1e-15);
  CHECK(std::abs(out(1, 1) - complex_t{0.7, 0}) < 1e-15);
}

TEST_CASE("ghz_state amplitudes and range checks") {
  const PureState bell = ghz_state(2);
  CHECK(bell.dim() == 4);
  CHECK(std::abs(bell[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(bell[3] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(bell[1]) == 0.0);

  const PureState g3 = ghz_state(3);
  CHECK(g3.dim() == 8);
  CHECK(std::abs(g3[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(g3[7] - 1.0 / std::sqrt(2.0)) < 1e-15);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < 8; ++i) norm2 += std::norm(g3[i]);
  CHECK(std::abs(norm2 - 1.0) < 1e-15);

  CHECK_THROWS_AS((void)ghz_state(1), std::invalid_argument);
  CHECK_THROWS_AS((void)ghz_state(13), std::invalid_argument);
}

TEST_CASE("gen_bipartite special points") {
  const DensityMatrix bell = gen_bipartite(0.5);
  CHECK(bell.matrix().max_abs_diff(density(biphoton_bell()).matrix()) < 1e-15);

  const DensityMatrix ones = gen_bipartite(0.0);
  CHECK(std::abs(ones(3, 3) - complex_t{1, 0}) < 1e-15);
  const DensityMatrix vac = gen_bipartite(1.0);
  CHECK(std::abs(vac(0, 0) - complex_t{1, 0}) < 1e-15);

  CHECK_THROWS_AS((void)gen_bipartite(-0.01), std::invalid_argument);
  CHECK_THROWS_AS((void)gen_bipartite(1.01), std::invalid_argument);
}

TEST_CASE("gen_bipartite is pure for every a") {
  for (double a = 0.0; a <= 1.0; a += 0.1) {
    const DensityMatrix rho = gen_bipartite(a);
    const ComplexMatrix sq =
        kernels::matmul(rho.matrix(), rho.matrix());
    CHECK(sq.max_abs_diff(rho.matrix()) < 1e-10);
  }
}

TEST_CASE("biphoton_bell equals the two-qubit GHZ state") {
  const PureState b = biphoton_bell();
  const PureState g = ghz_state(2);
  REQUIRE(b.dim() == g.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    CHECK(std::abs(b[i] - g[i]) == 0.0);
  }
}

TEST_CASE("signal-mode ADC output of gen_bipartite matches its explicit form") {
  for (double a : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    for (double g : {0.0, 0.3, 0.6, 1.0}) {
      const CpfChannel box({DampingRate(g), DampingRate(0.0)});
      const DensityMatrix out = box.apply(gen_bipartite(a));

      ComplexMatrix expected(4, 4);
      expected(0, 0) = a;
      expected(1, 1) = (1.0 - a) * g;
      const double cross = std::sqrt(a * (1.0 - a) * (1.0 - g));
      expected(0, 3) = cross;
      expected(3, 0) = cross;
      expected(3, 3) = (1.0 - a) * (1.0 - g);
      CHECK(out.matrix().max_abs_diff(expected) < 1e-12);
    }
  }
}

TEST_CASE("bosonic loss channel") {
  const int n_max = 12;
  // gamma = 0 acts as the identity
  auto rng = cpf::testing::make_rng(41);
  const DensityMatrix rho = cpf::testing::random_density(n_max + 1, rng);
  const DensityMatrix same = apply(bosonic_loss(DampingRate(0.0), n_max), rho);
  CHECK(same.matrix().max_abs_diff(rho.matrix()) < 1e-14);

  // a coherent state stays coherent with alpha -> sqrt(1-g) alpha
  const double n_bar = 1.0, g = 0.4;
  const DensityMatrix in = density(coherent_state(n_bar, 30));
  const DensityMatrix out = apply(bosonic_loss(DampingRate(g), 30), in);
  const DensityMatrix expected = density(coherent_state((1.0 - g) * n_bar, 30));
  CHECK(out.matrix().max_abs_diff(expected.matrix()) < 1e-12);

  // full damping ends in vacuum
  const DensityMatrix vac = apply(bosonic_loss(DampingRate(1.0), 30), in);
  CHECK(std::abs(vac(0, 0) - complex_t{1, 0}) < 1e-12);
}
