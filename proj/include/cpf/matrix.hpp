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

#include <complex>
#include <cstddef>
#include <vector>

namespace cpf {

using complex_t = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  complex_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const complex_t& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  complex_t* data() { return data_.data(); }
  const complex_t* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  ComplexMatrix adjoint() const;
  complex_t trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complex_t scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, complex_t s) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(complex_t s, ComplexMatrix a) {
    a *= s;
    return a;
  }

  /// Largest entrywise |a - b|.
  double max_abs_diff(const ComplexMatrix& other) const;
  /// Largest entrywise |a - a^dag|; only meaningful for square matrices.
  double hermiticity_defect() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex_t> data_;
};

}  // namespace cpf
