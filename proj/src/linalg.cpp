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

#include "cpf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cpf/config.hpp"
#include "cpf/kernels.hpp"

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace cpf {

namespace {

EighResult eigh_impl(const ComplexMatrix& m, char jobz) {
  if (!m.square()) {
    throw std::invalid_argument("eigendecomposition requires a square matrix");
  }
  const lapack_int n = static_cast<lapack_int>(m.rows());
  EighResult res;
  res.values.resize(m.rows());
  res.vectors = m;  // zheevd overwrites the input with the eigenvectors
  lapack_int info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, jobz, 'L', n,
                                   res.vectors.data(), n, res.values.data());
  if (info != 0) {
    throw std::runtime_error("zheevd failed with info=" + std::to_string(info));
  }
  return res;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    }
  }
  return out;
}

}  // namespace

EighResult eigh(const ComplexMatrix& m) { return eigh_impl(m, 'V'); }

std::vector<double> eigvalsh(const ComplexMatrix& m) {
  return eigh_impl(m, 'N').values;
}

PureState::PureState(std::size_t dim, std::vector<complex_t> amplitudes)
    : dim_(dim), amplitudes_(std::move(amplitudes)) {
  if (dim_ == 0 || amplitudes_.size() != dim_) {
    throw std::invalid_argument("amplitude count must equal dim");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > tolerances().state_norm) {
    throw std::invalid_argument("state is not normalized");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, TrustedTag)
    : mat_(std::move(m)) {
  if (!mat_.square() || mat_.rows() == 0) {
    throw std::invalid_argument("density matrix must be square");
  }
  if (mat_.rows() > dimension_cap()) {
    throw std::invalid_argument("dimension limit");
  }
  const Tolerances& tol = tolerances();
  if (mat_.hermiticity_defect() > tol.density_hermiticity) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(mat_.trace() - complex_t{1.0, 0.0}) > tol.unit_trace) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix m)
    : DensityMatrix(std::move(m), TrustedTag{}) {
  const auto w = eigvalsh(mat_);
  if (!w.empty() && w.front() < -tolerances().psd) {
    throw std::invalid_argument("density matrix is not PSD");
  }
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
  return DensityMatrix(std::move(m), TrustedTag{});
}

DensityMatrix density(const PureState& psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = psi[r] * std::conj(psi[c]);
    }
  }
  return DensityMatrix::trusted(std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() > dimension_cap() / b.dim()) {
    throw std::invalid_argument("dimension limit");
  }
  return DensityMatrix::trusted(kernels::kron(a.matrix(), b.matrix()));
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("sqrtm_psd requires square");
  const Tolerances& tol = tolerances();
  if (m.hermiticity_defect() > tol.sqrt_hermiticity) {
    throw std::invalid_argument("not Hermitian");
  }
  EighResult e = eigh(symmetrized(m));
  if (!e.values.empty() && e.values.front() < -tol.psd) {
    throw std::invalid_argument("not PSD");
  }
  // S = V sqrt(D) V^dagger with negative round-off eigenvalues clipped to 0.
  const std::size_t n = m.rows();
  ComplexMatrix scaled = e.vectors;
  for (std::size_t c = 0; c < n; ++c) {
    const double s = std::sqrt(std::max(e.values[c], 0.0));
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= s;
  }
  return kernels::matmul_adjoint_rhs(scaled, e.vectors);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity requires equal dimensions");
  }
  const ComplexMatrix s = sqrtm_psd(rho.matrix());
  const ComplexMatrix inner =
      kernels::matmul(kernels::matmul(s, sigma.matrix()), s);
  std::vector<double> w = eigvalsh(symmetrized(inner));
  const Tolerances& tol = tolerances();
  double wmax = 0.0;
  for (double v : w) wmax = std::max(wmax, v);
  const double cutoff = wmax * tol.fidelity_eigen_rel_cutoff;
  double f = 0.0;
  for (double v : w) {
    if (v > cutoff) f += std::sqrt(v);
  }
  if (f < 0.0 && f > -tol.fidelity_boundary) f = 0.0;
  if (f > 1.0 && f < 1.0 + tol.fidelity_boundary) f = 1.0;
  return f;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("trace distance requires equal dimensions");
  }
  const std::vector<double> w = eigvalsh(rho.matrix() - sigma.matrix());
  double t = 0.0;
  for (double v : w) t += std::abs(v);
  return 0.5 * t;
}

}  // namespace cpf
