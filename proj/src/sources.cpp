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

#include "cpf/sources.hpp"

#include <cmath>
#include <stdexcept>

#include "cpf/config.hpp"

namespace cpf {

PureState coherent_state(double n_bar, int n_max) {
  if (n_bar < 0.0) throw std::invalid_argument("n_bar must be >= 0");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const double alpha = std::sqrt(n_bar);
  std::vector<complex_t> amps(static_cast<std::size_t>(n_max) + 1);
  double c = std::exp(-n_bar / 2.0);  // c_n = e^{-n_bar/2} alpha^n / sqrt(n!)
  double kept = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
    amps[static_cast<std::size_t>(n)] = c;
    kept += c * c;
  }
  const double tail = 1.0 - kept;
  if (tail > tolerances().coherent_tail) {
    throw std::invalid_argument("increase truncation");
  }
  const double inv = 1.0 / std::sqrt(kept);
  for (auto& a : amps) a *= inv;
  const std::size_t dim = amps.size();
  return PureState(dim, std::move(amps));
}

PureState fock_one() { return PureState(2, {0.0, 1.0}); }

PureState ghz_state(int n_parties) {
  if (n_parties < 2 || n_parties > 12) {
    throw std::invalid_argument("GHZ parties must lie in [2, 12]");
  }
  const std::size_t dim = std::size_t{1} << n_parties;
  std::vector<complex_t> amps(dim);
  amps.front() = 1.0 / std::sqrt(2.0);
  amps.back() = 1.0 / std::sqrt(2.0);
  return PureState(dim, std::move(amps));
}

DensityMatrix gen_bipartite(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::invalid_argument("a must lie in [0, 1]");
  }
  ComplexMatrix m(4, 4);
  const double cross = std::sqrt(a * (1.0 - a));
  m(0, 0) = a;
  m(0, 3) = cross;
  m(3, 0) = cross;
  m(3, 3) = 1.0 - a;
  return DensityMatrix::trusted(std::move(m));
}

PureState biphoton_bell() { return ghz_state(2); }

KrausChannel bosonic_loss(DampingRate gamma, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
  const double g = gamma.gamma;
  const double t = 1.0 - g;
  std::vector<ComplexMatrix> ops;
  ops.reserve(dim);
  for (int k = 0; k <= n_max; ++k) {
    ComplexMatrix ak(dim, dim);
    double binom = 1.0;  // C(n, k), advanced over n
    for (int n = k; n <= n_max; ++n) {
      if (n > k) binom *= static_cast<double>(n) / (n - k);
      const double w = binom * std::pow(t, n - k) * std::pow(g, k);
      ak(static_cast<std::size_t>(n - k), static_cast<std::size_t>(n)) =
          std::sqrt(w);
    }
    ops.push_back(std::move(ak));
  }
  return KrausChannel(dim, std::move(ops));
}

}  // namespace cpf
