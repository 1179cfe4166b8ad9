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

#ifndef SUPERTROPICAL_LINALG_HPP
#define SUPERTROPICAL_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "supertropical/matrix.hpp"

namespace supertropical {

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat scalar_mul(const Scalar& s, const Mat& a);
/// A * v with v read as a column.
Vec apply_col(const Mat& a, const Vec& v);
/// v * A with v read as a row.
Vec apply_row(const Vec& v, const Mat& a);
/// Tropical scalar product sum_i v_i w_i.
Scalar dot(const Vec& v, const Vec& w);

Mat submatrix(const Mat& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
/// Matrix whose rows are the given vectors.
Mat rows_matrix(const std::vector<Vec>& rows);

/// Permanent |A|. Subset DP over columns, O(2^n n). Throws ShapeMismatch when not square.
Scalar permanent(const Mat& a);
bool is_nonsingular(const Mat& a);
/// (adj A)_{ij} = |A with row j and column i removed|; 1x1 input gives [[1]].
Mat adjoint(const Mat& a);
/// adj(A) / |A|. Throws SingularMatrix when |A| is ghost or zero.
Mat nabla(const Mat& a);
/// Returns (A A^∇, A^∇ A).
std::pair<Mat, Mat> quasi_identity(const Mat& a);

/// Every entry of A v lies in G_0.
bool g_annihilates(const Mat& a, const Vec& v);
inline bool ann_membership(const Mat& a, const Vec& v) { return g_annihilates(a, v); }

/// A^∇ v, which may contain ghosts.
Vec nabla_apply(const Mat& a, const Vec& v);
/// ν̂(A^∇ v).
Vec solve_max(const Mat& a, const Vec& v);

bool surpasses_vec(const Vec& v, const Vec& w);
bool geq_nu_vec(const Vec& v, const Vec& w);
bool surpasses_mat(const Mat& a, const Mat& b);
bool is_ghost(const Mat& a);

}  // namespace supertropical

#endif  // SUPERTROPICAL_LINALG_HPP
