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

#include "supertropical/dependence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "supertropical/errors.hpp"
#include "supertropical/linalg.hpp"
#include "tie_solver.hpp"

namespace supertropical {
namespace {

std::size_t common_dim(const std::vector<Vec>& gens) {
  if (gens.empty()) return 0;
  const std::size_t n = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != n) throw ShapeMismatch("vectors of different dimensions");
  return n;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order; stops when f returns true.
bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Some k x k submatrix using all given rows is nonsingular.
bool has_full_minor(const Mat& a) {
  const std::size_t k = a.rows();
  if (k == 0) return true;
  if (k > a.cols()) return false;
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  return for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
    return is_nonsingular(submatrix(a, rows, cols));
  });
}

std::vector<Vec> pick(const std::vector<Vec>& gens, const std::vector<std::size_t>& idx) {
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(gens[i]);
  return out;
}

DepWitness expand(const std::vector<Rational>& x, const std::vector<std::size_t>& support, std::size_t k,
                  std::optional<Vec> target) {
  DepWitness w{Vec(k), std::move(target)};
  for (std::size_t t = 0; t < support.size(); ++t) w.coeffs[support[t]] = Scalar::tangible(x[t]);
  return w;
}

std::optional<DepWitness> search_supports(const std::vector<Vec>& gens, const std::optional<Vec>& target) {
  const std::size_t k = gens.size();
  std::optional<DepWitness> found;
  for (std::size_t size = 1; size <= k && !found; ++size) {
    for_each_subset(k, size, [&](const std::vector<std::size_t>& sup) {
      auto x = detail::tie_feasible(pick(gens, sup), target);
      if (!x) return false;
      if (!target) {
        // Projective freedom: pin the first coefficient to 1.
        const Rational shift = x->front();
        for (auto& c : *x) c -= shift;
      }
      found = expand(*x, sup, k, target);
      return true;
    });
  }
  return found;
}

}  // namespace

std::vector<std::size_t> DepWitness::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) s.push_back(i);
  return s;
}

Vec combine(const Vec& coeffs, const std::vector<Vec>& gens) {
  if (coeffs.size() != gens.size()) throw ShapeMismatch("coefficient count differs from generator count");
  Vec sum(common_dim(gens));
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!coeffs[i].is_zero()) sum = sum + coeffs[i] * gens[i];
  return sum;
}

bool is_valid(const DepWitness& w, const std::vector<Vec>& gens) {
  if (w.coeffs.size() != gens.size()) return false;
  if (!is_tangible(w.coeffs) || w.support().empty()) return false;
  Vec sum = combine(w.coeffs, gens);
  if (w.target) {
    if (w.target->size() != sum.size()) return false;
    sum = sum + *w.target;
  }
  return is_ghost(sum);
}

Vec normalize_projective(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return Scalar::tangible(-s.value()) * v;
  return v;
}

bool projectively_equal(const Vec& v, const Vec& w) {
  return v.size() == w.size() && normalize_projective(v) == normalize_projective(w);
}

std::size_t rank(const Mat& a) {
  for (std::size_t k = std::min(a.rows(), a.cols()); k > 0; --k) {
    bool hit = for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        return is_nonsingular(submatrix(a, rows, cols));
      });
    });
    if (hit) return k;
  }
  return 0;
}

bool dependent(const std::vector<Vec>& gens) {
  if (gens.empty()) return false;
  common_dim(gens);
  return !has_full_minor(Mat::from_rows(gens));
}

std::optional<DepWitness> is_dependent(const std::vector<Vec>& gens) {
  if (!dependent(gens)) return std::nullopt;
  auto w = search_supports(gens, std::nullopt);
  if (!w || !is_valid(*w, gens)) throw Error("internal: dependent set without a witness");
  return w;
}

std::optional<DepWitness> dependence_on(const std::vector<Vec>& gens, const Vec& target) {
  if (!gens.empty() && common_dim(gens) != target.size()) throw ShapeMismatch();
  auto w = search_supports(gens, target);
  if (w && !is_valid(*w, gens)) throw Error("internal: invalid witness");
  return w;
}

BaseReport d_base(const std::vector<Vec>& gens, const std::vector<std::size_t>& order) {
  common_dim(gens);
  std::vector<bool> seen(gens.size(), false);
  for (auto i : order) {
    if (i >= gens.size() || seen[i]) throw InvalidInput("order must be a permutation of the generator indices");
    seen[i] = true;
  }
  if (order.size() != gens.size()) throw InvalidInput("order must be a permutation of the generator indices");
  BaseReport rep;
  std::vector<Vec> kept;
  for (auto i : order) {
    kept.push_back(gens[i]);
    if (has_full_minor(Mat::from_rows(kept))) {
      rep.indices.push_back(i);
    } else {
      kept.pop_back();
    }
  }
  rep.rank = rep.indices.size();
  rep.kind = BaseKind::d_base;
  for (auto i : rep.indices) rep.normalized.push_back(normalize_projective(gens[i]));
  return rep;
}

BaseReport d_base(const std::vector<Vec>& gens) {
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  return d_base(gens, order);
}

std::size_t max_rank(const std::vector<Vec>& gens) {
  if (gens.empty()) return 0;
  common_dim(gens);
  return rank(Mat::from_rows(gens));
}

std::vector<std::size_t> extend_with_tangible(const std::vector<Vec>& gens, const Vec& v) {
  if (!is_tangible(v)) throw InvalidInput("vector is not tangible");
  if (dependent(gens)) throw InvalidInput("set is dependent");
  if (!gens.empty() && common_dim(gens) != v.size()) throw ShapeMismatch();
  const std::size_t k = gens.size();
  std::vector<std::size_t> all(k);
  std::iota(all.begin(), all.end(), 0);
  auto with_v = [&](const std::vector<std::size_t>& idx) {
    auto rows = pick(gens, idx);
    rows.push_back(v);
    return has_full_minor(Mat::from_rows(rows));
  };
  if (with_v(all)) return all;
  std::vector<std::size_t> out;
  if (k == 0) return out;
  bool ok = for_each_subset(k, k - 1, [&](const std::vector<std::size_t>& idx) {
    if (!with_v(idx)) return false;
    out = idx;
    return true;
  });
  if (!ok) throw Error("internal: no extension found for a tangible vector");
  return out;
}

DepWitness saturate(const Vec& v, const std::vector<Vec>& gens, const DepWitness& w, SaturateOptions opts) {
  DepWitness given = w;
  given.target = v;
  if (!is_valid(given, gens)) throw InvalidInput("not a valid dependence of the target");
  const auto sup = w.support();
  auto sub = pick(gens, sup);
  const std::size_t n = v.size();
  if (opts.allow_fast_path && sup.size() == n && is_tangible(v)) {
    Mat cols = Mat::from_cols(sub);
    if (is_nonsingular(cols)) {
      Vec x = solve_max(cols, v);
      DepWitness fast{Vec(gens.size()), v};
      bool finite = true;
      for (std::size_t t = 0; t < sup.size(); ++t) {
        finite = finite && x[t].is_tangible();
        fast.coeffs[sup[t]] = x[t];
      }
      if (finite && is_valid(fast, gens)) return fast;
    }
  }
  auto x = detail::tie_greatest(sub, v);
  if (!x) throw Error("internal: saturation lost the given witness");
  return expand(*x, sup, gens.size(), v);
}

DepWitness sup_witness(const DepWitness& w1, const DepWitness& w2) {
  if (w1.target != w2.target) throw InvalidInput("witnesses have different targets");
  if (w1.coeffs.size() != w2.coeffs.size()) throw InvalidInput("witnesses over different generator lists");
  DepWitness out{Vec(w1.coeffs.size()), w1.target};
  for (std::size_t i = 0; i < w1.coeffs.size(); ++i) out.coeffs[i] = nu_hat(w1.coeffs[i] + w2.coeffs[i]);
  return out;
}

DepWitness sum_saturated(const std::vector<Vec>& gens, const DepWitness& wv, const DepWitness& wv2) {
  if (!wv.target || !wv2.target) throw InvalidInput("saturated witnesses need targets");
  if (wv.support() != wv2.support()) throw InvalidInput("witnesses on different supports");
  for (const auto* w : {&wv, &wv2}) {
    if (saturate(*w->target, gens, *w) != *w) throw InvalidInput("witness is not saturated");
  }
  DepWitness out{Vec(gens.size()), *wv.target + *wv2.target};
  for (std::size_t i = 0; i < gens.size(); ++i) out.coeffs[i] = nu_hat(wv.coeffs[i] + wv2.coeffs[i]);
  return out;
}

std::vector<Vec> annihilator_set(const Mat& a) {
  const std::size_t m = rank(a);
  const std::size_t n = a.cols();
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(a.col(j));
  std::vector<std::size_t> base;
  for_each_subset(n, m, [&](const std::vector<std::size_t>& idx) {
    if (!has_full_minor(Mat::from_rows(pick(cols, idx)))) return false;
    base = idx;
    return true;
  });
  std::vector<Vec> out;
  auto base_cols = pick(cols, base);
  for (std::size_t u = 0; u < n; ++u) {
    if (std::find(base.begin(), base.end(), u) != base.end()) continue;
    Vec x(n);
    x[u] = Scalar::one();
    if (!is_ghost(cols[u])) {
      auto w = dependence_on(base_cols, cols[u]);
      if (!w) throw Error("internal: column outside the span of a maximal independent set");
      for (std::size_t t = 0; t < base.size(); ++t) x[base[t]] = w->coeffs[t];
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<int> component_types(const Vec& v, const std::vector<Vec>& gens, const DepWitness& w) {
  Vec sum = combine(w.coeffs, gens);
  if (sum.size() != v.size()) throw ShapeMismatch();
  std::vector<int> types(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) types[j] = nu_geq(v[j], sum[j]) ? 1 : 2;
  return types;
}

std::string to_string(BaseKind k) { return k == BaseKind::d_base ? "d-base" : "s-base"; }

}  // namespace supertropical
