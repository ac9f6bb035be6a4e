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

#include "cpf/kernels.hpp"

#include <cstdint>
#include <stdexcept>

namespace cpf::kernels {

namespace {

void check_matmul_shapes(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul shape mismatch");
  }
}

void check_single_qubit_args(const ComplexMatrix& rho,
                             std::span<const ComplexMatrix> ops,
                             std::size_t qubit, std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (!rho.square() || rho.rows() != dim) {
    throw std::invalid_argument("state dimension is not 2^n_qubits");
  }
  if (qubit >= n_qubits) throw std::invalid_argument("qubit index out of range");
  for (const auto& k : ops) {
    if (k.rows() != 2 || k.cols() != 2) {
      throw std::invalid_argument("Kraus operators must be 2x2");
    }
  }
}

}  // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_matmul_shapes(a, b);
  const std::int64_t n = static_cast<std::int64_t>(a.rows());
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  ComplexMatrix out(a.rows(), cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t r = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < inner; ++k) {
      const complex_t aik = a(r, k);
      if (aik == complex_t{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        out(r, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix matmul_adjoint_rhs(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("matmul shape mismatch");
  }
  const std::int64_t n = static_cast<std::int64_t>(a.rows());
  const std::size_t inner = a.cols();
  const std::size_t cols = b.rows();
  ComplexMatrix out(a.rows(), cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t r = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < cols; ++j) {
      complex_t acc = 0.0;
      for (std::size_t k = 0; k < inner; ++k) {
        acc += a(r, k) * std::conj(b(j, k));
      }
      out(r, j) = acc;
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows(), cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  const std::int64_t ra = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < ra; ++i) {
    const std::size_t ia = static_cast<std::size_t>(i);
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const complex_t aij = a(ia, ja);
      for (std::size_t ib = 0; ib < rb; ++ib) {
        for (std::size_t jb = 0; jb < cb; ++jb) {
          out(ia * rb + ib, ja * cb + jb) = aij * b(ib, jb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix kraus_apply(std::span<const ComplexMatrix> ops,
                          const ComplexMatrix& rho) {
  if (!rho.square()) throw std::invalid_argument("state must be square");
  ComplexMatrix acc(rho.rows(), rho.cols());
  for (const auto& k : ops) {
    if (k.rows() != rho.rows() || k.cols() != rho.cols()) {
      throw std::invalid_argument("Kraus operator dimension mismatch");
    }
    acc += matmul_adjoint_rhs(matmul(k, rho), k);
  }
  return acc;
}

ComplexMatrix apply_single_qubit_kraus(const ComplexMatrix& rho,
                                       std::span<const ComplexMatrix> ops,
                                       std::size_t qubit,
                                       std::size_t n_qubits) {
  check_single_qubit_args(rho, ops, qubit, n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t mask = std::size_t{1} << (n_qubits - 1 - qubit);
  ComplexMatrix out(dim, dim);
  const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t ri = 0; ri < n; ++ri) {
    const std::size_t r = static_cast<std::size_t>(ri);
    const std::size_t rbit = (r & mask) ? 1 : 0;
    const std::size_t r0 = r & ~mask;
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t cbit = (c & mask) ? 1 : 0;
      const std::size_t c0 = c & ~mask;
      complex_t acc = 0.0;
      for (const auto& k : ops) {
        for (std::size_t a = 0; a < 2; ++a) {
          const complex_t kra = k(rbit, a);
          if (kra == complex_t{0.0, 0.0}) continue;
          const std::size_t rr = r0 | (a ? mask : 0);
          for (std::size_t b = 0; b < 2; ++b) {
            const std::size_t cc = c0 | (b ? mask : 0);
            acc += kra * rho(rr, cc) * std::conj(k(cbit, b));
          }
        }
      }
      out(r, c) = acc;
    }
  }
  return out;
}

namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_matmul_shapes(a, b);
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.cols();
  ComplexMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < inner; ++k) {
      const complex_t aik = a(r, k);
      if (aik == complex_t{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        out(r, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix matmul_adjoint_rhs(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("matmul shape mismatch");
  }
  const std::size_t rows = a.rows(), inner = a.cols(), cols = b.rows();
  ComplexMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols; ++j) {
      complex_t acc = 0.0;
      for (std::size_t k = 0; k < inner; ++k) {
        acc += a(r, k) * std::conj(b(j, k));
      }
      out(r, j) = acc;
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows(), cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const complex_t aij = a(ia, ja);
      for (std::size_t ib = 0; ib < rb; ++ib) {
        for (std::size_t jb = 0; jb < cb; ++jb) {
          out(ia * rb + ib, ja * cb + jb) = aij * b(ib, jb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix kraus_apply(std::span<const ComplexMatrix> ops,
                          const ComplexMatrix& rho) {
  if (!rho.square()) throw std::invalid_argument("state must be square");
  ComplexMatrix acc(rho.rows(), rho.cols());
  for (const auto& k : ops) {
    if (k.rows() != rho.rows() || k.cols() != rho.cols()) {
      throw std::invalid_argument("Kraus operator dimension mismatch");
    }
    acc += matmul_adjoint_rhs(matmul(k, rho), k);
  }
  return acc;
}

ComplexMatrix apply_single_qubit_kraus(const ComplexMatrix& rho,
                                       std::span<const ComplexMatrix> ops,
                                       std::size_t qubit,
                                       std::size_t n_qubits) {
  check_single_qubit_args(rho, ops, qubit, n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t mask = std::size_t{1} << (n_qubits - 1 - qubit);
  ComplexMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t rbit = (r & mask) ? 1 : 0;
    const std::size_t r0 = r & ~mask;
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t cbit = (c & mask) ? 1 : 0;
      const std::size_t c0 = c & ~mask;
      complex_t acc = 0.0;
      for (const auto& k : ops) {
        for (std::size_t a = 0; a < 2; ++a) {
          const complex_t kra = k(rbit, a);
          if (kra == complex_t{0.0, 0.0}) continue;
          const std::size_t rr = r0 | (a ? mask : 0);
          for (std::size_t b = 0; b < 2; ++b) {
            const std::size_t cc = c0 | (b ? mask : 0);
            acc += kra * rho(rr, cc) * std::conj(k(cbit, b));
          }
        }
      }
      out(r, c) = acc;
    }
  }
  return out;
}

}  // namespace serial

}  // namespace cpf::kernels
