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

#ifndef SUPERTROPICAL_TIE_SOLVER_HPP
#define SUPERTROPICAL_TIE_SOLVER_HPP

#include <optional>
#include <vector>

#include "supertropical/matrix.hpp"

namespace supertropical::detail {

// Finds tangible coefficients x (one per generator, all finite) such that
// target + sum_i x_i w_i lies in G_0. The target, when present, carries
// coefficient 1. Each component must have its maximum attained by a ghost
// term or by two terms; every such choice is a system of difference
// constraints, searched depth-first.

/// Any solution, or nullopt.
std::optional<std::vector<Rational>> tie_feasible(const std::vector<Vec>& gens, const std::optional<Vec>& target);

/// Coordinatewise greatest solution (target required), or nullopt when none
/// exists. Throws InvalidInput when solutions are unbounded above.
std::optional<std::vector<Rational>> tie_greatest(const std::vector<Vec>& gens, const Vec& target);

}  // namespace supertropical::detail

#endif  // SUPERTROPICAL_TIE_SOLVER_HPP
