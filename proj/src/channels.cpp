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

#include "cpf/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "cpf/config.hpp"
#include "cpf/kernels.hpp"

namespace cpf {

namespace {

// Entry budget for materialized product Kraus sets: 2^n ops of dim 4^n each.
constexpr std::size_t kKrausEntryBudget = std::size_t{1} << 24;

ComplexMatrix kron_chain(const std::vector<const ComplexMatrix*>& factors) {
  ComplexMatrix acc = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = kernels::kron(acc, *factors[i]);
  }
  return acc;
}

}  // namespace

KrausChannel::KrausChannel(std::size_t dim, std::vector<ComplexMatrix> ops)
    : dim_(dim), ops_(std::move(ops)) {
  if (dim_ == 0 || ops_.empty()) {
    throw std::invalid_argument("channel needs at least one Kraus operator");
  }
  ComplexMatrix sum(dim_, dim_);
  for (const auto& k : ops_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw std::invalid_argument("Kraus operator dimension mismatch");
    }
    sum += kernels::matmul(k.adjoint(), k);
  }
  if (sum.max_abs_diff(ComplexMatrix::identity(dim_)) >
      tolerances().kraus_completeness) {
    throw std::invalid_argument("Kraus completeness violated");
  }
}

KrausChannel adc(DampingRate gamma, std::size_t dim) {
  if (dim != 2) throw std::invalid_argument("qubit ADC only");
  ComplexMatrix k0(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma.gamma);
  ComplexMatrix k1(2, 2);
  k1(0, 1) = std::sqrt(gamma.gamma);
  return KrausChannel(2, {std::move(k0), std::move(k1)});
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) {
    throw std::invalid_argument("channel/state dimension mismatch");
  }
  return DensityMatrix::trusted(kernels::kraus_apply(ch.ops(), rho.matrix()));
}

KrausChannel lift(const KrausChannel& ch, std::size_t position,
                  std::size_t total_subsystems, std::size_t subsystem_dim) {
  if (position >= total_subsystems) {
    throw std::invalid_argument("subsystem position out of range");
  }
  if (ch.dim() != subsystem_dim) {
    throw std::invalid_argument("channel/subsystem dimension mismatch");
  }
  std::size_t dim = 1;
  for (std::size_t i = 0; i < total_subsystems; ++i) {
    if (dim > dimension_cap() / subsystem_dim) {
      throw std::invalid_argument("dimension limit");
    }
    dim *= subsystem_dim;
  }
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < position; ++i) left *= subsystem_dim;
  for (std::size_t i = position + 1; i < total_subsystems; ++i) {
    right *= subsystem_dim;
  }
  const ComplexMatrix il = ComplexMatrix::identity(left);
  const ComplexMatrix ir = ComplexMatrix::identity(right);
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch.ops().size());
  for (const auto& k : ch.ops()) {
    ops.push_back(kernels::kron(kernels::kron(il, k), ir));
  }
  return KrausChannel(dim, std::move(ops));
}

CpfChannel::CpfChannel(std::vector<DampingRate> qubit_rates)
    : rates_(std::move(qubit_rates)) {
  if (rates_.empty()) throw std::invalid_argument("channel needs qubits");
  std::size_t dim = 1;
  for (std::size_t i = 0; i < rates_.size(); ++i) {
    if (dim > dimension_cap() / 2) throw std::invalid_argument("dimension limit");
    dim *= 2;
  }
}

DensityMatrix CpfChannel::apply(const DensityMatrix& rho) const {
  const std::size_t n = rates_.size();
  if (rho.dim() != (std::size_t{1} << n)) {
    throw std::invalid_argument("channel/state dimension mismatch");
  }
  ComplexMatrix state = rho.matrix();
  for (std::size_t q = 0; q < n; ++q) {
    if (rates_[q].gamma == 0.0) continue;  // identity stage
    const KrausChannel stage = adc(rates_[q]);
    state = kernels::apply_single_qubit_kraus(state, stage.ops(), q, n);
  }
  return DensityMatrix::trusted(std::move(state));
}

KrausChannel CpfChannel::to_kraus() const {
  const std::size_t n = rates_.size();
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t n_ops = std::size_t{1} << n;
  if (n_ops > kKrausEntryBudget / (dim * dim)) {
    throw std::invalid_argument("dimension limit");
  }
  std::vector<KrausChannel> locals;
  locals.reserve(n);
  for (const auto& r : rates_) locals.push_back(adc(r));
  std::vector<ComplexMatrix> ops;
  ops.reserve(n_ops);
  for (std::size_t sel = 0; sel < n_ops; ++sel) {
    std::vector<const ComplexMatrix*> factors(n);
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = (sel >> (n - 1 - q)) & 1;
      factors[q] = &locals[q].ops()[bit];
    }
    ops.push_back(kron_chain(factors));
  }
  return KrausChannel(dim, std::move(ops));
}

CpfChannel cpf_channel(const CpfScenario& scenario, int target_box) {
  if (target_box < 0 || target_box >= scenario.n_boxes) {
    throw std::invalid_argument("target box out of range");
  }
  const DampingRate g0 = scenario.gamma0;
  const DampingRate g1 = scenario.gamma1;
  const int n = scenario.n_boxes;
  std::vector<DampingRate> rates;

  if (std::holds_alternative<FockSource>(scenario.source) ||
      std::holds_alternative<GhzSource>(scenario.source)) {
    rates.assign(static_cast<std::size_t>(n), g0);
    rates[static_cast<std::size_t>(target_box)] = g1;
  } else if (std::holds_alternative<GenBipartiteSource>(scenario.source) ||
             std::holds_alternative<BiphotonSiSource>(scenario.source)) {
    // qubit 2j = signal of box j, qubit 2j+1 = idler (kept lossless)
    rates.assign(static_cast<std::size_t>(2 * n), DampingRate(0.0));
    for (int j = 0; j < n; ++j) {
      rates[static_cast<std::size_t>(2 * j)] = (j == target_box) ? g1 : g0;
    }
  } else if (std::holds_alternative<BiphotonIfSource>(scenario.source)) {
    if (n % 2 != 0) throw std::invalid_argument("even N required");
    rates.assign(static_cast<std::size_t>(n), g0);
    // both modes probe boxes; the target occupies the first box of its pair
    const int pair = target_box / 2;
    rates[static_cast<std::size_t>(2 * pair)] = g1;
  } else {
    throw std::invalid_argument(
        "coherent source has no qubit channel wiring");
  }
  return CpfChannel(std::move(rates));
}

}  // namespace cpf
