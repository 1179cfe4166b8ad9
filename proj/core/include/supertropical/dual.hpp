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

#ifndef SUPERTROPICAL_DUAL_HPP
#define SUPERTROPICAL_DUAL_HPP

#include <cstddef>
#include <vector>

#include "supertropical/matrix.hpp"

namespace supertropical {

// Bases are row lists: b_i is row i of A.

/// Linear functional v -> sum_k v_k r_k given by its covector r.
struct Functional {
  Vec covector;
  [[nodiscard]] Scalar operator()(const Vec& v) const;
  friend bool operator==(const Functional&, const Functional&) = default;
};

struct ClosedBase {
  Mat matrix;  // A_B = I_A A
  std::vector<Vec> rows;
};

/// Throws SingularMatrix when A(B) is singular.
ClosedBase close_base(const std::vector<Vec>& base);
bool is_closed(const std::vector<Vec>& base);

/// A^∇ A A^∇.
Mat nabla_closure(const Mat& a);

/// epsilon_i(v) = (v A^⊽)_i, so epsilon_i(b_j) = (I_A)_{ji}.
std::vector<Functional> dual_base(const std::vector<Vec>& base);
/// Matrix whose row i is the covector of epsilon_i.
Mat dual_matrix(const std::vector<Vec>& base);

/// v I'_A = v, i.e. v is a combination of the base rows fixed by the quasi-identity.
bool in_vb(const std::vector<Vec>& base, const Vec& v);
/// sum_i epsilon_i(v) b_i. Throws NotInVB.
Vec reconstruct(const std::vector<Vec>& base, const Vec& v);

/// (epsilon_1(v), ..., epsilon_n(v)).
Vec double_dual(const std::vector<Vec>& base, const Vec& v);
/// The map v -> f_v is ghost-monic and onto on the base (grid-bounded).
bool double_dual_is_iso(const std::vector<Vec>& base);

/// Strict map v -> M v on column vectors.
struct MapByMatrix {
  Mat matrix;

  [[nodiscard]] Vec operator()(const Vec& v) const;
  /// M v lies in G_0.
  [[nodiscard]] bool in_ghost_kernel(const Vec& v) const;
  /// The ghost kernel meets the span of the generators only in ghosts,
  /// checked on a finite coefficient grid. Throws SizeLimitExceeded.
  [[nodiscard]] bool is_ghost_monic(const std::vector<Vec>& generators) const;
  [[nodiscard]] bool is_ghost_monic() const;  // generators: standard base
  [[nodiscard]] bool is_tropically_onto(const std::vector<Vec>& generators, std::size_t target_rank) const;
  [[nodiscard]] bool is_iso(const std::vector<Vec>& generators, std::size_t target_rank) const;
};

std::vector<Vec> standard_base(std::size_t n);

}  // namespace supertropical

#endif  // SUPERTROPICAL_DUAL_HPP
