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

#include "supertropical/span.hpp"

#include <algorithm>
#include <functional>

#include "supertropical/errors.hpp"
#include "supertropical/linalg.hpp"

namespace supertropical {
namespace {

void check_dims(const std::vector<Vec>& gens, const Vec& v) {
  for (const auto& g : gens)
    if (g.size() != v.size()) throw ShapeMismatch("vectors of different dimensions");
}

// Greatest coefficient keeping every term ν-below v; nullopt for -inf.
// An all-zero generator gets 0.
std::optional<Rational> principal(const Vec& w, const Vec& v) {
  std::optional<Rational> best;
  bool any = false;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (w[j].is_zero()) continue;
    if (v[j].is_zero()) return std::nullopt;
    Rational c = v[j].value() - w[j].value();
    if (!any || c < *best) best = c;
    any = true;
  }
  return any ? best : std::optional<Rational>(Rational(0));
}

// Components where term i at its principal coefficient reaches v_j.
struct Reach {
  std::vector<std::size_t> tangible_hits;  // reaches a tangible v_j with a tangible entry
  bool ghost_hit_on_tangible = false;      // reaches a tangible v_j through a ghost entry
};

Reach reach(const Vec& w, const Rational& alpha, const Vec& v) {
  Reach r;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (w[j].is_zero() || !v[j].is_tangible()) continue;
    if (alpha + w[j].value() != v[j].value()) continue;
    if (w[j].is_ghost()) r.ghost_hit_on_tangible = true;
    else r.tangible_hits.push_back(j);
  }
  return r;
}

// The members at their principal value cover every tangible v_j exactly once.
bool exact_cover(const std::vector<Reach>& reaches, const std::vector<bool>& at_top, const Vec& v) {
  std::vector<int> hits(v.size(), 0);
  for (std::size_t t = 0; t < reaches.size(); ++t) {
    if (!at_top[t]) continue;
    if (reaches[t].ghost_hit_on_tangible) return false;
    for (auto j : reaches[t].tangible_hits) ++hits[j];
  }
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j].is_tangible() && hits[j] != 1) return false;
  return true;
}

Vec ghost_part_of(const Vec& v) {
  Vec g(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j].is_ghost()) g[j] = v[j];
  return g;
}

// Visits nonempty subsets of {0..k-1} as sorted sequences in lexicographic order.
bool lex_subsets(std::size_t k, std::vector<std::size_t>& cur, std::size_t from,
                 const std::function<bool(const std::vector<std::size_t>&)>& f) {
  for (std::size_t i = from; i < k; ++i) {
    cur.push_back(i);
    if (f(cur)) return true;
    if (lex_subsets(k, cur, i + 1, f)) return true;
    cur.pop_back();
  }
  return false;
}

std::vector<Vec> without_class(const std::vector<Vec>& gens, std::size_t i) {
  std::vector<Vec> rest;
  for (std::size_t t = 0; t < gens.size(); ++t)
    if (!projectively_equal(gens[t], gens[i])) rest.push_back(gens[t]);
  return rest;
}

}  // namespace

std::vector<std::size_t> SpanWitness::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) s.push_back(i);
  return s;
}

std::optional<SpanWitness> spans(const std::vector<Vec>& gens, const Vec& v) {
  check_dims(gens, v);
  const std::size_t k = gens.size();
  std::vector<std::optional<Rational>> top(k);
  std::vector<Reach> reaches(k);
  for (std::size_t i = 0; i < k; ++i) {
    top[i] = principal(gens[i], v);
    if (top[i]) reaches[i] = reach(gens[i], *top[i], v);
  }
  std::optional<SpanWitness> found;
  std::vector<std::size_t> cur;
  lex_subsets(k, cur, 0, [&](const std::vector<std::size_t>& sup) {
    for (auto i : sup)
      if (!top[i]) return false;
    // Each member sits at its principal value or strictly below (one unit
    // under it); lowered members stay strictly under v everywhere.
    std::vector<Reach> r;
    for (auto i : sup) r.push_back(reaches[i]);
    const std::size_t m = sup.size();
    std::vector<bool> at_top(m);
    for (std::size_t mask = (std::size_t{1} << m); mask-- > 0;) {
      // Bit m-1-t set means member t at its principal value, so higher masks
      // are lexicographically greater coefficient tuples.
      for (std::size_t t = 0; t < m; ++t) at_top[t] = (mask >> (m - 1 - t)) & 1u;
      if (!exact_cover(r, at_top, v)) continue;
      SpanWitness w{Vec(k), ghost_part_of(v)};
      for (std::size_t t = 0; t < m; ++t)
        w.coeffs[sup[t]] = Scalar::tangible(at_top[t] ? *top[sup[t]] : *top[sup[t]] - Rational(1));
      found = std::move(w);
      return true;
    }
    return false;
  });
  if (found && !is_valid(*found, gens, v)) throw Error("internal: invalid span witness");
  return found;
}

bool is_valid(const SpanWitness& w, const std::vector<Vec>& gens, const Vec& v) {
  if (!is_tangible(w.coeffs) || w.support().empty() || !is_ghost(w.ghost_part)) return false;
  return combine(w.coeffs, gens) + w.ghost_part == v;
}

bool spans_set(const std::vector<Vec>& gens, const std::vector<Vec>& targets) {
  return std::all_of(targets.begin(), targets.end(), [&](const Vec& t) { return spans(gens, t).has_value(); });
}

bool is_critical(std::size_t i, const std::vector<Vec>& gens) {
  if (i >= gens.size()) throw InvalidInput("index out of range");
  return !spans(without_class(gens, i), gens[i]).has_value();
}

std::vector<std::size_t> critical_indices(const std::vector<Vec>& gens) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (is_critical(i, gens)) out.push_back(i);
  return out;
}

BaseReport s_base(const std::vector<Vec>& gens) {
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!is_zero(gens[i])) live.push_back(i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t < live.size(); ++t) {
      std::vector<Vec> rest;
      for (std::size_t u = 0; u < live.size(); ++u)
        if (u != t) rest.push_back(gens[live[u]]);
      if (spans(rest, gens[live[t]])) {
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(t));
        changed = true;
        break;
      }
    }
  }
  BaseReport rep;
  rep.indices = live;
  rep.rank = live.size();
  rep.kind = BaseKind::s_base;
  for (auto i : live) rep.normalized.push_back(normalize_projective(gens[i]));
  return rep;
}

bool is_thick(const std::vector<Vec>& sub, const std::vector<Vec>& ambient) {
  if (!sub.empty() && !ambient.empty() && sub.front().size() != ambient.front().size()) throw ShapeMismatch();
  return max_rank(sub) == max_rank(ambient);
}

bool is_generalized_permutation(const Mat& p) {
  if (!p.is_square()) return false;
  const std::size_t n = p.rows();
  std::vector<int> per_col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int per_row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& s = p(i, j);
      if (s.is_zero()) continue;
      if (!s.is_tangible()) return false;
      ++per_row;
      ++per_col[j];
    }
    if (per_row != 1) return false;
  }
  return std::all_of(per_col.begin(), per_col.end(), [](int c) { return c == 1; });
}

Mat change_of_base(const Mat& a, const Mat& a2) {
  if (a.rows() != a2.rows() || a.cols() != a2.cols()) throw NoChangeOfBase("bases of different shapes");
  const std::size_t n = a.rows();
  Mat p(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    Vec target = a2.row(r);
    bool matched = false;
    for (std::size_t s = 0; s < n && !matched; ++s) {
      if (used[s]) continue;
      Vec src = a.row(s);
      auto lead = std::find_if(src.begin(), src.end(), [](const Scalar& x) { return !x.is_zero(); });
      if (lead == src.end()) continue;
      const Scalar& t = target[static_cast<std::size_t>(lead - src.begin())];
      if (t.is_zero()) continue;
      Scalar lambda = Scalar::tangible(t.value() - lead->value());
      if (lambda * src != target) continue;
      p(r, s) = lambda;
      used[s] = true;
      matched = true;
    }
    if (!matched) throw NoChangeOfBase();
  }
  if (mat_mul(p, a) != a2) throw NoChangeOfBase();
  return p;
}

bool is_almost_tangible(const Vec& v, const std::vector<Vec>& gens) {
  check_dims(gens, v);
  if (is_ghost(v) && !is_zero(v)) return false;
  // Any combination c with v ⊨ c keeps its members at or below their
  // principal values; lowered members vanish under v. So only the set of
  // members at their principal value matters, and it must reproduce v.
  std::vector<std::size_t> idx;
  std::vector<Rational> top;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (auto t = principal(gens[i], v)) {
      idx.push_back(i);
      top.push_back(*t);
    }
  std::vector<Reach> r;
  for (std::size_t t = 0; t < idx.size(); ++t) r.push_back(reach(gens[idx[t]], top[t], v));
  const std::size_t m = idx.size();
  if (m > 20) throw SizeLimitExceeded("too many generators for the almost-tangible test");
  std::vector<bool> at_top(m);
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    for (std::size_t t = 0; t < m; ++t) at_top[t] = (mask >> t) & 1u;
    if (!exact_cover(r, at_top, v)) continue;
    Vec c(v.size());
    for (std::size_t t = 0; t < m; ++t)
      if (at_top[t]) c = c + Scalar::tangible(top[t]) * gens[idx[t]];
    if (c != v) return false;
  }
  return true;
}

}  // namespace supertropical
