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

#include "supertropical/dual.hpp"

#include <set>

#include "supertropical/dependence.hpp"
#include "supertropical/errors.hpp"
#include "supertropical/linalg.hpp"

namespace supertropical {

Scalar Functional::operator()(const Vec& v) const { return dot(v, covector); }

ClosedBase close_base(const std::vector<Vec>& base) {
  Mat a = Mat::from_rows(base);
  if (!a.is_square()) throw ShapeMismatch("a base needs as many vectors as coordinates");
  auto [ia, ia2] = quasi_identity(a);
  Mat ab = mat_mul(ia, a);
  if (mat_mul(quasi_identity(ab).first, ab) != ab) throw Error("internal: closure is not closed");
  return {ab, ab.row_list()};
}

bool is_closed(const std::vector<Vec>& base) {
  Mat a = Mat::from_rows(base);
  return mat_mul(quasi_identity(a).first, a) == a;
}

Mat nabla_closure(const Mat& a) {
  Mat n = nabla(a);
  return mat_mul(mat_mul(n, a), n);
}

Mat dual_matrix(const std::vector<Vec>& base) {
  return nabla_closure(Mat::from_rows(base)).transpose();
}

std::vector<Functional> dual_base(const std::vector<Vec>& base) {
  std::vector<Functional> out;
  for (auto& r : dual_matrix(base).row_list()) out.push_back({r});
  return out;
}

bool in_vb(const std::vector<Vec>& base, const Vec& v) {
  Mat a = Mat::from_rows(base);
  if (v.size() != a.cols()) throw ShapeMismatch();
  return apply_row(v, quasi_identity(a).second) == v;
}

Vec reconstruct(const std::vector<Vec>& base, const Vec& v) {
  if (!in_vb(base, v)) throw NotInVB();
  Vec f = double_dual(base, v);
  return apply_row(f, Mat::from_rows(base));
}

Vec double_dual(const std::vector<Vec>& base, const Vec& v) {
  return apply_row(v, nabla_closure(Mat::from_rows(base)));
}

bool double_dual_is_iso(const std::vector<Vec>& base) {
  MapByMatrix phi{nabla_closure(Mat::from_rows(base)).transpose()};
  return phi.is_iso(base, base.size());
}

Vec MapByMatrix::operator()(const Vec& v) const { return apply_col(matrix, v); }

bool MapByMatrix::in_ghost_kernel(const Vec& v) const { return is_ghost(apply_col(matrix, v)); }

std::vector<Vec> standard_base(std::size_t n) { return Mat::identity(n).row_list(); }

bool MapByMatrix::is_ghost_monic() const { return is_ghost_monic(standard_base(matrix.cols())); }

bool MapByMatrix::is_ghost_monic(const std::vector<Vec>& generators) const {
  for (const auto& g : generators)
    if (g.size() != matrix.cols()) throw ShapeMismatch();
  const std::size_t k = generators.size();
  if (k == 0) return true;
  std::vector<Vec> images;
  for (const auto& g : generators) images.push_back(apply_col(matrix, g));
  // Coefficient grid: 0, pairwise entry differences within a row of the
  // generators or of their images, and a sentinel below all of them.
  std::set<Rational> grid{Rational(0)};
  for (const std::vector<Vec>* family : {&generators, static_cast<const std::vector<Vec>*>(&images)}) {
    const std::size_t dim = family->front().size();
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          const Scalar& x = (*family)[a][j];
          const Scalar& y = (*family)[b][j];
          if (a != b && !x.is_zero() && !y.is_zero()) grid.insert(y.value() - x.value());
        }
  }
  grid.insert(*grid.begin() - Rational(1));
  // Module elements use coefficients of both layers.
  std::vector<Scalar> values{Scalar::zero()};
  for (const auto& q : grid) {
    values.push_back(Scalar::tangible(q));
    values.push_back(Scalar::ghost(q));
  }
  const std::size_t radix = values.size();
  double combos = 1;
  for (std::size_t i = 1; i < k; ++i) combos *= static_cast<double>(radix);
  if (combos > 2e6) throw SizeLimitExceeded("ghost-monic grid too large");
  // The first nonzero coefficient is normalised to 1 or its ghost.
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::size_t total = 1;
    for (std::size_t i = lead + 1; i < k; ++i) total *= radix;
    for (const Scalar& head : {Scalar::one(), Scalar::ghost(0)}) {
      for (std::size_t code = 0; code < total; ++code) {
        Vec coeffs(k);
        coeffs[lead] = head;
        std::size_t c = code;
        for (std::size_t i = lead + 1; i < k; ++i, c /= radix) coeffs[i] = values[c % radix];
        if (!is_ghost(combine(coeffs, generators)) && is_ghost(combine(coeffs, images))) return false;
      }
    }
  }
  return true;
}

bool MapByMatrix::is_tropically_onto(const std::vector<Vec>& generators, std::size_t target_rank) const {
  std::vector<Vec> images;
  for (const auto& g : generators) images.push_back(apply_col(matrix, g));
  return max_rank(images) == target_rank;
}

bool MapByMatrix::is_iso(const std::vector<Vec>& generators, std::size_t target_rank) const {
  return is_ghost_monic(generators) && is_tropically_onto(generators, target_rank);
}

}  // namespace supertropical
