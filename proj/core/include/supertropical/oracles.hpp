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

#ifndef SUPERTROPICAL_ORACLES_HPP
#define SUPERTROPICAL_ORACLES_HPP

#include <optional>
#include <set>
#include <vector>

#include "supertropical/dependence.hpp"
#include "supertropical/matrix.hpp"

// Reference implementations built from scalar arithmetic and plain loops only.
namespace supertropical::oracle {

/// Sum over all n! permutations, n <= 8.
Scalar brute_permanent(const Mat& a);

/// Candidate coefficient values: chains of entry differences plus a sentinel.
/// Throws SizeLimitExceeded past 2000 values.
std::set<Rational> candidate_grid(const std::vector<Vec>& gens, const std::optional<Vec>& target);

/// Exhaustive search over supports and grid tuples, k, n <= 4.
/// Returns the first valid witness in lexicographic order.
std::optional<DepWitness> brute_dependence(const std::vector<Vec>& gens, const std::optional<Vec>& target);

/// No valid grid witness on the same support has a ν-larger coefficient.
bool check_saturated(const DepWitness& w, const std::vector<Vec>& gens, const Vec& v);

}  // namespace supertropical::oracle

#endif  // SUPERTROPICAL_ORACLES_HPP
