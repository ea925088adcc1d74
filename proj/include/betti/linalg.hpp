// Copyright 2026 The Betti-ES Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense exact linear algebra over Q. Dimensions here stay in the low
// hundreds, so plain Gauss-Jordan with reduced rationals is adequate.

#include <cstddef>
#include <vector>

#include "betti/arith.hpp"

namespace betti {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  Matrix scaled(const Rat& s) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  // Row vector times matrix.
  std::vector<Rat> apply_left(const std::vector<Rat>& v) const;

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of {x : A x = 0}, one vector per free column.
  std::vector<std::vector<Rat>> kernel() const;

  // Stack other's rows under this one (column counts must match).
  void append_rows(const Matrix& other);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace betti
