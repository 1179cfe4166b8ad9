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

#ifndef SUPERTROPICAL_SPAN_HPP
#define SUPERTROPICAL_SPAN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "supertropical/dependence.hpp"
#include "supertropical/matrix.hpp"

namespace supertropical {

/// v = sum_i coeffs_i S_i + ghost_part with ghost_part in G_0^(n).
struct SpanWitness {
  Vec coeffs;
  Vec ghost_part;

  [[nodiscard]] std::vector<std::size_t> support() const;
  friend bool operator==(const SpanWitness&, const SpanWitness&) = default;
};

/// Witness that v ⊨ a tangible combination of S: lexicographically least
/// support, then the lexicographically greatest coefficients on it.
std::optional<SpanWitness> spans(const std::vector<Vec>& gens, const Vec& v);
bool spans_set(const std::vector<Vec>& gens, const std::vector<Vec>& targets);
/// The reconstruction identity of a span witness.
bool is_valid(const SpanWitness& w, const std::vector<Vec>& gens, const Vec& v);

/// S[i] is not spanned by S with the projective class of S[i] removed.
bool is_critical(std::size_t i, const std::vector<Vec>& gens);
std::vector<std::size_t> critical_indices(const std::vector<Vec>& gens);
/// Repeatedly deletes elements spanned by the others (index order), then drops zero vectors.
BaseReport s_base(const std::vector<Vec>& gens);

bool is_thick(const std::vector<Vec>& sub, const std::vector<Vec>& ambient);
bool is_generalized_permutation(const Mat& p);
/// P with A' = P A. Throws NoChangeOfBase.
Mat change_of_base(const Mat& a, const Mat& a2);

/// No w != v in the span of S satisfies v ⊨ w.
bool is_almost_tangible(const Vec& v, const std::vector<Vec>& gens);

}  // namespace supertropical

#endif  // SUPERTROPICAL_SPAN_HPP
