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

#include <utility>

#include "cpf/linalg.hpp"
#include "cpf/scenario.hpp"

namespace cpf {

/// Fidelity-based error-probability window for one scenario.
struct BoundsResult {
  double lower;
  double upper;
  double fidelity_used;
};

/// Generic bounds in terms of the per-box output fidelity F:
///   p_err <= (N-1) F^{2M}        (clamped to 1)
///   p_err >= (N-1)/(2N) F^{4M}
double bound_upper(double fidelity, int n_boxes, int m_uses);
double bound_lower(double fidelity, int n_boxes, int m_uses);

/// F = exp(-(n_bar/2) (sqrt(1-g0) - sqrt(1-g1))^2) between damped coherent
/// states.
double fidelity_coherent(DampingRate gamma0, DampingRate gamma1, double n_bar);

/// F = sqrt((1-g0)(1-g1)) + sqrt(g0 g1) between damped single-photon states.
double fidelity_fock(DampingRate gamma0, DampingRate gamma1);

/// F = (1-a) sqrt((1-x^2)(1-y^2)) + a + xy - a xy with x = sqrt(1-g0),
/// y = sqrt(1-g1), for the signal-idler state sqrt(a)|00> + sqrt(1-a)|11>.
double fidelity_gen_bipartite(double a, DampingRate gamma0, DampingRate gamma1);

/// F = (1/2)(sqrt(1-g0) sqrt(1-g1) + 1 + sqrt(g0 g1)), the a = 1/2 case.
double fidelity_biphoton_si(DampingRate gamma0, DampingRate gamma1);

/// Idler-free fidelity between the pair outputs under ADC rates
/// (gamma1, gamma0) and (gamma0, gamma0). Computed numerically from the 4x4
/// density matrices; this is the authoritative value.
double fidelity_biphoton_if(DampingRate gamma0, DampingRate gamma1);

/// Nested-radical closed-form expression for the idler-free fidelity. It
/// fails to reproduce the numeric value (kept only as a diagnostic) and can
/// be NaN where its radicands go negative.
double fidelity_biphoton_if_closed_form(DampingRate gamma0,
                                        DampingRate gamma1);

/// Whole-array fidelity between GHZ outputs with the target at box_i vs
/// box_k, computed on the full 2^N space.
double fidelity_ghz(const CpfScenario& scenario, int box_i, int box_k);

struct FidelityMinimum {
  double a_min;
  double f_min;
  // gamma0 == gamma1 makes the fidelity constant 1 in a; a_min = 0 is then
  // reported by convention and this flag marks the full-interval minimizer.
  bool degenerate;
};

/// Minimize fidelity_gen_bipartite over a in [0, 1]: coarse 1e-4 grid scan
/// refined by golden-section search to width 1e-10.
FidelityMinimum minimize_fidelity_over_a(DampingRate gamma0,
                                         DampingRate gamma1);

/// The two channel-output branches discriminated by the protocol, built
/// through the numeric Kraus path: {target-branch, reference-branch}.
/// For GHZ these are whole-array outputs (target at box 0 vs box 1).
std::pair<DensityMatrix, DensityMatrix> scenario_output_pair(
    const CpfScenario& scenario);

/// Source-resolved fidelity between the two output branches (closed form
/// where one exists, numeric for GHZ and idler-free).
double scenario_fidelity(const CpfScenario& scenario);

/// Numeric trace distance between the two output branches.
double scenario_trace_distance(const CpfScenario& scenario);

/// Bounds with the prefactor/exponent matched to the source kind:
/// generic sources use the forms above; the idler-free lower bound carries
/// prefactor (N-2)/(2N); the GHZ bounds use the whole-array fidelity with
/// exponents M / 2M.
BoundsResult bounds_for_scenario(const CpfScenario& scenario);

}  // namespace cpf
