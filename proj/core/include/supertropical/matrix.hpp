// Copyright 2026 The supertropical Authors
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

#ifndef SUPERTROPICAL_MATRIX_HPP
#define SUPERTROPICAL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "supertropical/scalar.hpp"

namespace supertropical {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of scalars.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Throws ShapeMismatch on ragged input.
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols);
  static Mat identity(std::size_t n);
  static Mat diagonal(const Vec& d);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vec row(std::size_t i) const;
  [[nodiscard]] Vec col(std::size_t j) const;
  [[nodiscard]] std::vector<Vec> row_list() const;
  [[nodiscard]] Mat transpose() const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Vector of tangibles from plain values.
Vec tangible_vec(std::initializer_list<Rational> values);

bool is_tangible(const Vec& v);
bool is_ghost(const Vec& v);
bool is_zero(const Vec& v);
Vec nu(const Vec& v);
Vec nu_hat(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator*(const Scalar& a, const Vec& v);

std::ostream& operator<<(std::ostream& os, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace supertropical

#endif  // SUPERTROPICAL_MATRIX_HPP
