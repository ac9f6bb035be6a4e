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

#include "cpf/receiver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cpf {

namespace {

// splitmix64 finalizer; chained to key independent streams.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream(std::uint64_t seed, std::uint64_t trial,
                     std::uint64_t box, std::uint64_t counter) {
  return mix64(mix64(mix64(mix64(seed) ^ trial) ^ box) ^ counter);
}

double uniform01(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Unbiased-enough index pick in [0, n) via a widening multiply.
std::uint32_t pick_index(std::uint64_t h, std::uint32_t n) {
  return static_cast<std::uint32_t>(
      (static_cast<unsigned __int128>(h) * n) >> 64);
}

constexpr std::uint64_t kTargetSalt = ~std::uint64_t{0};
constexpr std::uint64_t kTieSalt = ~std::uint64_t{0} - 1;

void check_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("probability must lie in [0, 1]");
  }
}

double p_det_log_space(double p, int m_trials, int m_count) {
  const double lg = std::lgamma(m_trials + 1.0) - std::lgamma(m_count + 1.0) -
                    std::lgamma(m_trials - m_count + 1.0);
  return std::exp(lg + m_count * std::log(p) +
                  (m_trials - m_count) * std::log1p(-p));
}

}  // namespace

double click_prob_coherent(DampingRate gamma, ClickModel model) {
  const double g = gamma.gamma;
  const double p_zero = std::exp(g - 1.0);  // e^{-tau} at n_bar = 1
  if (model == ClickModel::AtLeastOne) return 1.0 - p_zero;
  return p_zero * (1.0 - g);
}

double click_prob_fock(DampingRate gamma, ClickModel /*model*/) {
  // The output holds at most one photon, so P(n=1) and P(n>=1) coincide.
  return 1.0 - gamma.gamma;
}

ReceiverModel::ReceiverModel(double p_target_, double p_reference_)
    : p_target(p_target_), p_reference(p_reference_) {
  check_prob(p_target);
  check_prob(p_reference);
  mode = (p_target >= p_reference) ? DecisionMode::Max : DecisionMode::Min;
}

ReceiverModel receiver_model(const CpfScenario& scenario, ClickModel model) {
  if (std::holds_alternative<CoherentSource>(scenario.source)) {
    return ReceiverModel(click_prob_coherent(scenario.gamma1, model),
                         click_prob_coherent(scenario.gamma0, model));
  }
  if (std::holds_alternative<FockSource>(scenario.source)) {
    return ReceiverModel(click_prob_fock(scenario.gamma1, model),
                         click_prob_fock(scenario.gamma0, model));
  }
  throw std::invalid_argument(
      "photon-counting receiver requires a coherent or fock source");
}

double p_det(double p, int m_trials, int m_count) {
  check_prob(p);
  if (m_trials < 0 || m_count < 0 || m_count > m_trials) {
    throw std::invalid_argument("count out of range");
  }
  if (p == 0.0) return m_count == 0 ? 1.0 : 0.0;
  if (p == 1.0) return m_count == m_trials ? 1.0 : 0.0;
  const double predicted_log =
      m_count * std::log(p) + (m_trials - m_count) * std::log1p(-p);
  if (m_trials > 500 || predicted_log < -600.0) {
    return p_det_log_space(p, m_trials, m_count);
  }
  double binom = 1.0;  // C(M, m) by multiplicative recurrence
  for (int i = 1; i <= m_count; ++i) {
    binom *= static_cast<double>(m_trials - m_count + i) / i;
  }
  return binom * std::pow(p, m_count) * std::pow(1.0 - p, m_trials - m_count);
}

double p_cum_below(double p, int m_trials, int m_t) {
  check_prob(p);
  if (m_t < 0 || m_t > m_trials) {
    throw std::invalid_argument("count out of range");
  }
  double acc = 0.0;
  for (int m = 0; m < m_t; ++m) acc += p_det(p, m_trials, m);
  return acc;
}

double p_success_minmax(int n_boxes, int m_uses, const ReceiverModel& model) {
  if (n_boxes < 2) throw std::invalid_argument("n_boxes must be >= 2");
  if (m_uses < 0) throw std::invalid_argument("m_uses must be >= 0");
  double pt = model.p_target;
  double pr = model.p_reference;
  if (model.mode == DecisionMode::Min) {
    pt = 1.0 - pt;  // count reversal m -> M - m turns Min into Max
    pr = 1.0 - pr;
  }

  const int m = m_uses;
  std::vector<double> det_t(m + 1), det_r(m + 1), below(m + 1);
  double cum = 0.0;
  for (int k = 0; k <= m; ++k) {
    below[k] = cum;  // P(ref count < k)
    det_t[k] = p_det(pt, m, k);
    det_r[k] = p_det(pr, m, k);
    cum += det_r[k];
  }

  double total = 0.0;
  for (int mt = 0; mt <= m; ++mt) {
    // carry = C(N-1, r-1) p_det(p_R, M, m_T)^{r-1}, advanced over r
    double carry = 1.0;
    for (int r = 1; r <= n_boxes; ++r) {
      total += std::pow(below[mt], n_boxes - r) * (1.0 / r) * carry * det_t[mt];
      carry *= det_r[mt] * static_cast<double>(n_boxes - r) / r;
    }
  }
  return total;
}

SimResult simulate_receiver(int n_boxes, int m_uses, const ReceiverModel& model,
                            long long trials, std::uint64_t seed) {
  if (n_boxes < 2) throw std::invalid_argument("n_boxes must be >= 2");
  if (m_uses < 0) throw std::invalid_argument("m_uses must be >= 0");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  const bool max_mode = model.mode == DecisionMode::Max;
  long long errors = 0;

#pragma omp parallel
  {
    std::vector<int> counts(static_cast<std::size_t>(n_boxes));
#pragma omp for reduction(+ : errors) schedule(static)
    for (long long t = 0; t < trials; ++t) {
      const std::uint64_t ut = static_cast<std::uint64_t>(t);
      const int target = static_cast<int>(pick_index(
          stream(seed, ut, kTargetSalt, 0), static_cast<std::uint32_t>(n_boxes)));
      for (int b = 0; b < n_boxes; ++b) {
        const double p = (b == target) ? model.p_target : model.p_reference;
        int c = 0;
        for (int u = 0; u < m_uses; ++u) {
          const std::uint64_t h =
              stream(seed, ut, static_cast<std::uint64_t>(b),
                     static_cast<std::uint64_t>(u));
          if (uniform01(h) < p) ++c;
        }
        counts[static_cast<std::size_t>(b)] = c;
      }
      int best = counts[0];
      for (int b = 1; b < n_boxes; ++b) {
        if (max_mode ? counts[b] > best : counts[b] < best) best = counts[b];
      }
      int ties = 0;
      for (int b = 0; b < n_boxes; ++b) {
        if (counts[b] == best) ++ties;
      }
      int chosen = -1;
      int pick = static_cast<int>(pick_index(stream(seed, ut, kTieSalt, 0),
                                             static_cast<std::uint32_t>(ties)));
      for (int b = 0; b < n_boxes; ++b) {
        if (counts[b] == best && pick-- == 0) {
          chosen = b;
          break;
        }
      }
      if (chosen != target) ++errors;
    }
  }

  const double p_hat =
      static_cast<double>(errors) / static_cast<double>(trials);
  const double se = std::sqrt(p_hat * (1.0 - p_hat) / trials);
  return {trials, errors, p_hat, se};
}

}  // namespace cpf
