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

#include <vector>

#include "cpf/matrix.hpp"

namespace cpf {

/// Hermitian eigendecomposition, eigenvalues ascending. Columns of `vectors`
/// are the eigenvectors.
struct EighResult {
  std::vector<double> values;
  ComplexMatrix vectors;
};

EighResult eigh(const ComplexMatrix& m);
std::vector<double> eigvalsh(const ComplexMatrix& m);

/// Normalized pure state: squared norm within 1e-12 of 1.
class PureState {
 public:
  PureState(std::size_t dim, std::vector<complex_t> amplitudes);

  std::size_t dim() const { return dim_; }
  const std::vector<complex_t>& amplitudes() const { return amplitudes_; }
  const complex_t& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::size_t dim_;
  std::vector<complex_t> amplitudes_;
};

/// Hermitian, PSD, unit-trace density operator. Construction validates all
/// three invariants; the `trusted` factory skips the (eigendecomposition-
/// backed) PSD check for matrices that are PSD by construction, e.g. CPT-map
/// images of valid states.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);
  static DensityMatrix trusted(ComplexMatrix m);

  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const complex_t& operator()(std::size_t r, std::size_t c) const {
    return mat_(r, c);
  }

 private:
  struct TrustedTag {};
  DensityMatrix(ComplexMatrix m, TrustedTag);
  ComplexMatrix mat_;
};

/// |psi><psi| as a density operator.
DensityMatrix density(const PureState& psi);

/// Kronecker product of states. dim = a.dim * b.dim, capped at dimension_cap().
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Hermitian PSD principal square root: S with S S = m. Eigenvalues in
/// [-1e-10, 0) are clipped to 0; anything more negative is rejected.
ComplexMatrix sqrtm_psd(const ComplexMatrix& m);

/// Bures fidelity F(rho, sigma) = Tr sqrt(sqrt(rho) sigma sqrt(rho)), in [0,1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Trace distance (1/2) sum |eig(rho - sigma)|, in [0,1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace cpf
