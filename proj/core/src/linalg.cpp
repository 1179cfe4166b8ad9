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

#include "supertropical/linalg.hpp"

#include "supertropical/errors.hpp"

namespace supertropical {

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch();
  Mat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch();
  Mat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Mat scalar_mul(const Scalar& s, const Mat& a) {
  Mat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Vec apply_col(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw ShapeMismatch();
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

Vec apply_row(const Vec& v, const Mat& a) {
  if (a.rows() != v.size()) throw ShapeMismatch();
  Vec r(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] += v[i] * a(i, j);
  }
  return r;
}

Scalar dot(const Vec& v, const Vec& w) {
  if (v.size() != w.size()) throw ShapeMismatch();
  Scalar s;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

Mat submatrix(const Mat& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Mat s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  return s;
}

Mat rows_matrix(const std::vector<Vec>& rows) { return Mat::from_rows(rows); }

Scalar permanent(const Mat& a) {
  if (!a.is_square()) throw ShapeMismatch("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Scalar::one();
  if (n > 24) throw SizeLimitExceeded("permanent limited to n <= 24");
  // dp[mask]: sum over injections of rows 0..|mask|-1 onto the columns in mask.
  // Distributivity makes the semiring sum exact, ghosts from ties included.
  std::vector<Scalar> dp(std::size_t{1} << n);
  dp[0] = Scalar::one();
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const auto i = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (a(i, j).is_zero()) continue;
      dp[mask | (std::size_t{1} << j)] += dp[mask] * a(i, j);
    }
  }
  return dp.back();
}

bool is_nonsingular(const Mat& a) { return permanent(a).is_tangible(); }

Mat adjoint(const Mat& a) {
  if (!a.is_square()) throw ShapeMismatch("adjoint of a non-square matrix");
  const std::size_t n = a.rows();
  Mat adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar::one();
    return adj;
  }
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      adj(i, j) = permanent(submatrix(a, rows, cols));
    }
  return adj;
}

Mat nabla(const Mat& a) {
  Scalar det = permanent(a);
  if (!det.is_tangible()) throw SingularMatrix();
  return scalar_mul(inverse(det), adjoint(a));
}

std::pair<Mat, Mat> quasi_identity(const Mat& a) {
  Mat n = nabla(a);
  return {mat_mul(a, n), mat_mul(n, a)};
}

bool g_annihilates(const Mat& a, const Vec& v) { return is_ghost(apply_col(a, v)); }

Vec nabla_apply(const Mat& a, const Vec& v) { return apply_col(nabla(a), v); }

Vec solve_max(const Mat& a, const Vec& v) { return nu_hat(nabla_apply(a, v)); }

bool surpasses_vec(const Vec& v, const Vec& w) {
  if (v.size() != w.size()) throw ShapeMismatch();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!ghost_surpasses(v[i], w[i])) return false;
  return true;
}

bool geq_nu_vec(const Vec& v, const Vec& w) {
  if (v.size() != w.size()) throw ShapeMismatch();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!nu_geq(v[i], w[i])) return false;
  return true;
}

bool surpasses_mat(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ghost_surpasses(a(i, j), b(i, j))) return false;
  return true;
}

bool is_ghost(const Mat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_ghost0()) return false;
  return true;
}

}  // namespace supertropical
