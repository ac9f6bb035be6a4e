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

#include <cstdint>

#include "cpf/scenario.hpp"

namespace cpf {

/// Box-count decision rule: declare the box with the largest (Max) or
/// smallest (Min) total photon count over the M uses.
enum class DecisionMode { Max, Min };

/// Per-use click probability model. The detector registers a click on
/// exactly one photon by default; the at-least-one variant treats it as a
/// true threshold detector.
enum class ClickModel { ExactlyOne, AtLeastOne };

/// Click probabilities per protocol use behind a channel with rate gamma.
/// Coherent: P(n=1) = e^{gamma-1}(1-gamma) at n_bar = 1; the threshold
/// variant returns 1 - e^{gamma-1}. Fock: 1 - gamma under either model.
double click_prob_coherent(DampingRate gamma,
                           ClickModel model = ClickModel::ExactlyOne);
double click_prob_fock(DampingRate gamma,
                       ClickModel model = ClickModel::ExactlyOne);

struct ReceiverModel {
  double p_target;
  double p_reference;
  DecisionMode mode;  // Max iff p_target > p_reference (ties default to Max)

  ReceiverModel(double p_target, double p_reference);
};

/// Receiver model for a scenario; only coherent and fock sources produce
/// per-box photon-count statistics.
ReceiverModel receiver_model(const CpfScenario& scenario,
                             ClickModel model = ClickModel::ExactlyOne);

/// Binomial pmf C(M,m) p^m (1-p)^{M-m}; log-space evaluation for M > 500.
double p_det(double p, int m_trials, int m_count);

/// P(count < m_t) for a Binomial(M, p) count; p_cum_below(., ., 0) = 0.
double p_cum_below(double p, int m_trials, int m_t);

/// Exact success probability of the min/max receiver with uniform
/// tie-breaking:
///   sum_{r=1}^{N} sum_{m_T=0}^{M} P(ref < m_T)^{N-r} (1/r) C(N-1, r-1)
///                 p_det(p_T, M, m_T) p_det(p_R, M, m_T)^{r-1}
/// (Max mode as written; Min mode via the count reversal m -> M-m,
/// p -> 1-p.) The all-zero-counts outcome is covered by 0^0 = 1, giving a
/// uniform random choice over all N boxes.
double p_success_minmax(int n_boxes, int m_uses, const ReceiverModel& model);

struct SimResult {
  long long trials;
  long long errors;
  double p_err_estimate;
  double std_error;  // sqrt(p(1-p)/trials) from the estimate
};

/// Monte Carlo run of the same receiver: per-box binomial counts, extremal
/// pick with uniform tie-breaking. Streams are keyed on
/// (seed, trial, box, use) through a counter-based generator, so results are
/// reproducible and independent of thread count.
SimResult simulate_receiver(int n_boxes, int m_uses, const ReceiverModel& model,
                            long long trials, std::uint64_t seed);

}  // namespace cpf
