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

#include "supertropical/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "supertropical/errors.hpp"

namespace supertropical::oracle {
namespace {

constexpr std::size_t kMaxGrid = 2000;

bool ghost_combination(const std::vector<Scalar>& coeffs, const std::vector<Vec>& gens, const Vec* target) {
  const std::size_t n = gens.front().size();
  for (std::size_t j = 0; j < n; ++j) {
    Scalar s = target ? (*target)[j] : Scalar::zero();
    for (std::size_t i = 0; i < gens.size(); ++i) s = add(s, mul(coeffs[i], gens[i][j]));
    if (s.is_tangible()) return false;
  }
  return true;
}

void check_sizes(const std::vector<Vec>& gens, const std::optional<Vec>& target) {
  if (gens.empty()) throw InvalidInput("empty generator list");
  const std::size_t n = gens.front().size();
  if (gens.size() > 4 || n > 4) throw SizeLimitExceeded("oracle limited to k, n <= 4");
  for (const auto& g : gens)
    if (g.size() != n) throw ShapeMismatch();
  if (target && target->size() != n) throw ShapeMismatch();
}

// Visits every tuple of `slots` grid values; stops when f returns true.
bool tuples(std::size_t slots, const std::vector<Rational>& grid, const std::function<bool(const std::vector<Rational>&)>& f) {
  std::vector<std::size_t> pos(slots, 0);
  std::vector<Rational> vals(slots, grid.empty() ? Rational(0) : grid.front());
  if (grid.empty() && slots > 0) return false;
  while (true) {
    for (std::size_t i = 0; i < slots; ++i) vals[i] = grid[pos[i]];
    if (f(vals)) return true;
    std::size_t i = slots;
    while (i > 0) {
      --i;
      if (++pos[i] < grid.size()) break;
      pos[i] = 0;
      if (i == 0) return false;
    }
    if (slots == 0) return false;
  }
}

}  // namespace

Scalar brute_permanent(const Mat& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > 8) throw SizeLimitExceeded("brute permanent limited to n <= 8");
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  Scalar sum;
  do {
    Scalar term = Scalar::one();
    for (std::size_t i = 0; i < n; ++i) term = mul(term, a(pi[i], i));
    sum = add(sum, term);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return sum;
}

std::set<Rational> candidate_grid(const std::vector<Vec>& gens, const std::optional<Vec>& target) {
  std::vector<Vec> rows = gens;
  if (target) rows.push_back(*target);
  const std::size_t n = rows.front().size();
  std::set<Rational> diffs;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < rows.size(); ++b)
        if (a != b && !rows[a][j].is_zero() && !rows[b][j].is_zero())
          diffs.insert(rows[a][j].value() - rows[b][j].value());
  const std::size_t k = gens.size();
  const std::size_t steps = target ? k : 2 * (k - 1);
  std::set<Rational> grid;
  if (!target) grid.insert(Rational(0));
  std::set<Rational> level{Rational(0)};
  for (std::size_t s = 0; s < steps; ++s) {
    std::set<Rational> next;
    for (const auto& x : level)
      for (const auto& d : diffs) next.insert(x + d);
    level = std::move(next);
    grid.insert(level.begin(), level.end());
    if (grid.size() > kMaxGrid) throw SizeLimitExceeded("oracle grid too large");
  }
  if (grid.empty()) grid.insert(Rational(0));
  grid.insert(*grid.begin() - Rational(1));
  return grid;
}

std::optional<DepWitness> brute_dependence(const std::vector<Vec>& gens, const std::optional<Vec>& target) {
  check_sizes(gens, target);
  const auto set = candidate_grid(gens, target);
  const std::vector<Rational> grid(set.begin(), set.end());
  const std::size_t k = gens.size();
  std::optional<DepWitness> found;
  // Supports in lexicographic order of their sorted index sequences.
  std::function<bool(std::vector<std::size_t>&, std::size_t)> walk = [&](std::vector<std::size_t>& sup,
                                                                        std::size_t from) {
    for (std::size_t i = from; i < k; ++i) {
      sup.push_back(i);
      const std::size_t free = target ? sup.size() : sup.size() - 1;
      bool hit = tuples(free, grid, [&](const std::vector<Rational>& vals) {
        std::vector<Scalar> coeffs(k);
        for (std::size_t t = 0; t < sup.size(); ++t) {
          const std::size_t off = target ? t : t - 1;
          coeffs[sup[t]] = (!target && t == 0) ? Scalar::one() : Scalar::tangible(vals[off]);
        }
        if (!ghost_combination(coeffs, gens, target ? &*target : nullptr)) return false;
        found = DepWitness{Vec(coeffs.begin(), coeffs.end()), target};
        return true;
      });
      if (hit || walk(sup, i + 1)) return true;
      sup.pop_back();
    }
    return false;
  };
  std::vector<std::size_t> sup;
  walk(sup, 0);
  return found;
}

bool check_saturated(const DepWitness& w, const std::vector<Vec>& gens, const Vec& v) {
  check_sizes(gens, v);
  if (w.coeffs.size() != gens.size()) throw ShapeMismatch();
  if (!ghost_combination(std::vector<Scalar>(w.coeffs.begin(), w.coeffs.end()), gens, &v)) return false;
  std::vector<std::size_t> sup;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i)
    if (!w.coeffs[i].is_zero()) sup.push_back(i);
  auto set = candidate_grid(gens, v);
  for (auto i : sup) set.insert(w.coeffs[i].value());
  const std::vector<Rational> grid(set.begin(), set.end());
  const bool beaten = tuples(sup.size(), grid, [&](const std::vector<Rational>& vals) {
    bool larger = false;
    for (std::size_t t = 0; t < sup.size(); ++t) larger = larger || vals[t] > w.coeffs[sup[t]].value();
    if (!larger) return false;
    std::vector<Scalar> coeffs(gens.size());
    for (std::size_t t = 0; t < sup.size(); ++t) coeffs[sup[t]] = Scalar::tangible(vals[t]);
    return ghost_combination(coeffs, gens, &v);
  });
  return !beaten;
}

}  // namespace supertropical::oracle
