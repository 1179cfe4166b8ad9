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

#ifndef SUPERTROPICAL_BILINEAR_HPP
#define SUPERTROPICAL_BILINEAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supertropical/dependence.hpp"
#include "supertropical/matrix.hpp"

namespace supertropical {

/// Strict bilinear form <x,y> = x^t G y.
struct GramForm {
  Mat g;
  [[nodiscard]] std::size_t dim() const { return g.rows(); }
};

/// Gram matrix of the tropical dot product on W: g_ij = <w_i, w_j>.
GramForm gram_of_dot(const std::vector<Vec>& w);
/// W G W^t for a form G on the ambient space.
Mat gram_matrix(const std::vector<Vec>& w, const GramForm& f);

Scalar evaluate(const GramForm& f, const Vec& x, const Vec& y);
bool is_g_orthogonal(const GramForm& f, const Vec& x, const Vec& y);
/// <x, s> in G_0 for every s in S.
bool in_left_complement(const GramForm& f, const std::vector<Vec>& s, const Vec& x);
/// <s, x> in G_0 for every s in S.
bool in_right_complement(const GramForm& f, const std::vector<Vec>& s, const Vec& x);

/// <x, y> in G_0 for every y, i.e. x^t G is ghost.
bool in_radical(const GramForm& f, const Vec& x);
bool is_nondegenerate(const GramForm& f);

/// Witness when |W G W^t| is ghost, none when tangible. Throws DegenerateSpace
/// when the grid finds a non-ghost vector of span(W) orthogonal to all of W.
std::optional<DepWitness> gram_dependence(const std::vector<Vec>& w, const GramForm& f);

enum class Regime { grid, sampled };

struct SymmetryVerdict {
  bool violated = false;
  Regime regime = Regime::grid;  // where the witness was found, or the widest search on success
  Vec x, y;                      // witness pair when violated
  std::size_t pairs_checked = 0;
};

/// <x,y> in G_0 iff <y,x> in G_0 over a coefficient grid plus `budget` seeded samples.
SymmetryVerdict is_orthogonal_symmetric(const GramForm& f, std::size_t budget, std::uint64_t seed);
/// Orthogonal symmetry plus <x,y> ≅_ν <y,x> whenever <x,y> is tangible.
SymmetryVerdict is_supertropically_symmetric(const GramForm& f, std::size_t budget, std::uint64_t seed);

enum class Isotropy { nonisotropic, isotropic, strictly_isotropic };
Isotropy isotropy(const GramForm& f, const Vec& x);

std::string to_string(Regime r);
std::string to_string(Isotropy i);

}  // namespace supertropical

#endif  // SUPERTROPICAL_BILINEAR_HPP
