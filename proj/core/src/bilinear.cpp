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

#include "supertropical/bilinear.hpp"

#include <random>
#include <set>

#include "supertropical/errors.hpp"
#include "supertropical/linalg.hpp"

namespace supertropical {
namespace {

void check(const GramForm& f, const Vec& x) {
  if (!f.g.is_square() || x.size() != f.g.rows()) throw ShapeMismatch();
}

// Vectors over {zero} ∪ values whose first nonzero coordinate is 0.
std::vector<Vec> normalized_grid(std::size_t k, const std::vector<Scalar>& values) {
  std::vector<Vec> out;
  const std::size_t radix = values.size() + 1;
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::size_t total = 1;
    for (std::size_t i = lead + 1; i < k; ++i) total *= radix;
    if (total > 200000) throw SizeLimitExceeded("coefficient grid too large");
    for (std::size_t code = 0; code < total; ++code) {
      Vec x(k);
      x[lead] = Scalar::one();
      std::size_t c = code;
      for (std::size_t i = lead + 1; i < k; ++i, c /= radix) {
        std::size_t d = c % radix;
        if (d > 0) x[i] = values[d - 1];
      }
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<Scalar> difference_values(const Mat& g) {
  std::set<Rational> diffs{Rational(0)};
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!g(i, j).is_zero()) entries.push_back(g(i, j).value());
  for (const auto& a : entries)
    for (const auto& b : entries) diffs.insert(a - b);
  diffs.insert(*diffs.begin() - Rational(1));
  std::vector<Scalar> out;
  for (const auto& d : diffs) out.push_back(Scalar::tangible(d));
  return out;
}

// Rows x^t G for every grid vector, so each pair is a dot product.
struct Pairing {
  std::vector<Vec> xs, left;
};

Pairing precompute(const GramForm& f, std::vector<Vec> xs) {
  Pairing p;
  for (auto& x : xs) {
    p.left.push_back(apply_row(x, f.g));
  }
  p.xs = std::move(xs);
  return p;
}

// Scans pairs; `bad` decides whether (<x,y>, <y,x>) violates the property.
template <typename Bad>
SymmetryVerdict scan(const GramForm& f, std::size_t budget, std::uint64_t seed, Bad bad) {
  SymmetryVerdict v;
  const std::size_t k = f.dim();
  auto run = [&](const Pairing& p, Regime regime) {
    for (std::size_t a = 0; a < p.xs.size(); ++a)
      for (std::size_t b = a; b < p.xs.size(); ++b) {
        ++v.pairs_checked;
        Scalar xy = dot(p.left[a], p.xs[b]);
        Scalar yx = dot(p.left[b], p.xs[a]);
        if (bad(xy, yx)) {
          v.violated = true;
          v.regime = regime;
          v.x = p.xs[a];
          v.y = p.xs[b];
          return true;
        }
      }
    return false;
  };
  if (k == 0) return v;
  if (run(precompute(f, normalized_grid(k, difference_values(f.g))), Regime::grid)) return v;
  if (budget == 0) return v;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-6, 6);
  std::uniform_int_distribution<int> zero(0, 3);
  std::vector<Vec> samples;
  for (std::size_t s = 0; s < budget; ++s) {
    Vec x(k);
    for (auto& c : x)
      if (zero(rng) != 0) c = Scalar::tangible(val(rng));
    samples.push_back(std::move(x));
  }
  // Each sample is paired with itself and its successor.
  Pairing p = precompute(f, std::move(samples));
  for (std::size_t a = 0; a < p.xs.size(); ++a)
    for (std::size_t b : {a, (a + 1) % p.xs.size()}) {
      ++v.pairs_checked;
      Scalar xy = dot(p.left[a], p.xs[b]);
      Scalar yx = dot(p.left[b], p.xs[a]);
      if (bad(xy, yx)) {
        v.violated = true;
        v.regime = Regime::sampled;
        v.x = p.xs[a];
        v.y = p.xs[b];
        return v;
      }
    }
  v.regime = Regime::sampled;
  return v;
}

}  // namespace

GramForm gram_of_dot(const std::vector<Vec>& w) {
  if (w.empty()) throw InvalidInput("empty generator list");
  Mat g(w.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) g(i, j) = dot(w[i], w[j]);
  return {g};
}

Mat gram_matrix(const std::vector<Vec>& w, const GramForm& f) {
  Mat wm = Mat::from_rows(w);
  return mat_mul(mat_mul(wm, f.g), wm.transpose());
}

Scalar evaluate(const GramForm& f, const Vec& x, const Vec& y) {
  check(f, x);
  check(f, y);
  return dot(apply_row(x, f.g), y);
}

bool is_g_orthogonal(const GramForm& f, const Vec& x, const Vec& y) { return evaluate(f, x, y).is_ghost0(); }

bool in_left_complement(const GramForm& f, const std::vector<Vec>& s, const Vec& x) {
  for (const auto& t : s)
    if (!is_g_orthogonal(f, x, t)) return false;
  return true;
}

bool in_right_complement(const GramForm& f, const std::vector<Vec>& s, const Vec& x) {
  for (const auto& t : s)
    if (!is_g_orthogonal(f, t, x)) return false;
  return true;
}

bool in_radical(const GramForm& f, const Vec& x) {
  check(f, x);
  return is_ghost(apply_row(x, f.g));
}

bool is_nondegenerate(const GramForm& f) { return is_nonsingular(f.g); }

std::optional<DepWitness> gram_dependence(const std::vector<Vec>& w, const GramForm& f) {
  Mat gt = gram_matrix(w, f);
  // beta^t W lies in the radical of span(W) when beta^t G~ is ghost.
  for (const auto& beta : normalized_grid(w.size(), difference_values(gt))) {
    if (is_ghost(apply_row(beta, gt)) && !is_ghost(combine(beta, w))) throw DegenerateSpace();
  }
  if (permanent(gt).is_tangible()) return std::nullopt;
  return is_dependent(w);
}

SymmetryVerdict is_orthogonal_symmetric(const GramForm& f, std::size_t budget, std::uint64_t seed) {
  return scan(f, budget, seed, [](const Scalar& xy, const Scalar& yx) { return xy.is_ghost0() != yx.is_ghost0(); });
}

SymmetryVerdict is_supertropically_symmetric(const GramForm& f, std::size_t budget, std::uint64_t seed) {
  return scan(f, budget, seed, [](const Scalar& xy, const Scalar& yx) {
    if (xy.is_ghost0() != yx.is_ghost0()) return true;
    return (xy.is_tangible() || yx.is_tangible()) && !nu_equal(xy, yx);
  });
}

Isotropy isotropy(const GramForm& f, const Vec& x) {
  Scalar s = evaluate(f, x, x);
  if (s.is_zero()) return Isotropy::strictly_isotropic;
  return s.is_ghost() ? Isotropy::isotropic : Isotropy::nonisotropic;
}

std::string to_string(Regime r) { return r == Regime::grid ? "grid" : "sampled"; }

std::string to_string(Isotropy i) {
  switch (i) {
    case Isotropy::nonisotropic:
      return "nonisotropic";
    case Isotropy::isotropic:
      return "isotropic";
    case Isotropy::strictly_isotropic:
      return "strictly_isotropic";
  }
  return {};
}

}  // namespace supertropical
