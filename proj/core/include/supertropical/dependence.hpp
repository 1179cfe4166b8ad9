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

#ifndef SUPERTROPICAL_DEPENDENCE_HPP
#define SUPERTROPICAL_DEPENDENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "supertropical/matrix.hpp"

namespace supertropical {

/// Tangible coefficients over a generator list, optionally for a target v:
/// v + sum_i coeffs_i w_i (or the plain sum) is expected to be ghost.
struct DepWitness {
  Vec coeffs;
  std::optional<Vec> target;

  /// Indices with non-zero coefficient.
  [[nodiscard]] std::vector<std::size_t> support() const;
  friend bool operator==(const DepWitness&, const DepWitness&) = default;
};

enum class BaseKind { d_base, s_base };

struct BaseReport {
  std::vector<std::size_t> indices;
  std::size_t rank = 0;
  BaseKind kind = BaseKind::d_base;
  std::vector<Vec> normalized;
};

/// sum_i coeffs_i S_i.
Vec combine(const Vec& coeffs, const std::vector<Vec>& gens);
/// Coefficients in T_0, nonempty support, and the combination (plus target) in G_0.
bool is_valid(const DepWitness& w, const std::vector<Vec>& gens);

/// Scale so the first non-zero coordinate has value 0, keeping its layer.
Vec normalize_projective(const Vec& v);
/// w = a v for some tangible a.
bool projectively_equal(const Vec& v, const Vec& w);

/// Largest k with a nonsingular k x k submatrix.
std::size_t rank(const Mat& a);
/// No |S| x |S| submatrix of A(S) is nonsingular. Decision only.
bool dependent(const std::vector<Vec>& gens);
/// A verified witness when S is dependent (smallest support, lexicographically least).
std::optional<DepWitness> is_dependent(const std::vector<Vec>& gens);
/// Witness for target + sum alpha_i S_i in G_0, smallest support first.
std::optional<DepWitness> dependence_on(const std::vector<Vec>& gens, const Vec& target);

/// Greedy scan in the given order (0-based), keeping vectors that stay independent.
BaseReport d_base(const std::vector<Vec>& gens, const std::vector<std::size_t>& order);
BaseReport d_base(const std::vector<Vec>& gens);
std::size_t max_rank(const std::vector<Vec>& gens);

/// Indices of S that stay independent together with the tangible v:
/// all of S when possible, otherwise the lowest-index subset of size |S| - 1.
std::vector<std::size_t> extend_with_tangible(const std::vector<Vec>& gens, const Vec& v);

struct SaturateOptions {
  bool allow_fast_path = true;
};

/// The coefficientwise greatest witness for w.target on the support of w.
DepWitness saturate(const Vec& v, const std::vector<Vec>& gens, const DepWitness& w, SaturateOptions opts = {});
/// gamma_i = ν̂(alpha_i + beta_i).
DepWitness sup_witness(const DepWitness& w1, const DepWitness& w2);
/// Witness for v + v' from saturated witnesses of v and v' with the same support.
DepWitness sum_saturated(const std::vector<Vec>& gens, const DepWitness& wv, const DepWitness& wv2);

/// Tangible, independent column vectors g-annihilating A, at least n - rank(A) of them.
std::vector<Vec> annihilator_set(const Mat& a);

/// Per component: 1 when target_j is not dominated by the terms alpha_i w_ij, else 2.
std::vector<int> component_types(const Vec& v, const std::vector<Vec>& gens, const DepWitness& w);

std::string to_string(BaseKind k);

}  // namespace supertropical

#endif  // SUPERTROPICAL_DEPENDENCE_HPP
