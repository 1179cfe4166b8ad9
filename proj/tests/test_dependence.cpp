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

#include <doctest.h>

#include "helpers.hpp"

using namespace supertropical;

namespace {
// Example vectors v1..v4 in F^(3).
const std::vector<Vec> kFour = rows("5 5 0\n5 5 4\n0 1 4\n0 2 4");
std::vector<Vec> sub(const std::vector<Vec>& s, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> out;
  for (auto i : idx) out.push_back(s[i]);
  return out;
}
}  // namespace

TEST_CASE("is_dependent") {
  auto dep = sub(kFour, {0, 1, 2});
  auto w = is_dependent(dep);
  REQUIRE(w);
  CHECK(w->coeffs == V("0 0 0"));
  CHECK(combine(w->coeffs, dep) == V("5v 5v 4v"));
  CHECK(is_valid(*w, dep));
  CHECK_FALSE(is_dependent(sub(kFour, {1, 2, 3})));
  auto w3 = is_dependent(rows("0 -inf\n-inf 0\n0 0"));
  REQUIRE(w3);
  CHECK(is_ghost(combine(w3->coeffs, rows("0 -inf\n-inf 0\n0 0"))));
  CHECK_FALSE(is_dependent({V("1 2")}));
  CHECK_FALSE(is_dependent({V("1v 2")}));
  CHECK(is_dependent({V("1v 2v")}));
  CHECK(is_dependent({V("-inf -inf")}));
  CHECK_THROWS_AS(is_dependent({V("1 2"), V("1")}), ShapeMismatch);
}

TEST_CASE("rank") {
  CHECK(rank(M("4 4 0\n4 4 1\n4 4 2")) == 2);
  CHECK(rank(Mat::from_rows(kFour)) == 3);
  CHECK(rank(M("1v 2v\n0v -inf")) == 0);
}

TEST_CASE("d_base depends on visiting order") {
  auto a = d_base(kFour, {0, 1, 2, 3});
  CHECK(a.indices == std::vector<std::size_t>{0, 1});
  CHECK(a.rank == 2);
  auto b = d_base(kFour, {1, 2, 3, 0});
  CHECK(b.indices == std::vector<std::size_t>{1, 2, 3});
  CHECK(b.rank == 3);
  CHECK(b.normalized.front() == V("0 0 -1"));
  auto e = d_base(standard_base(3), {2, 0, 1});
  CHECK(e.rank == 3);
  CHECK_THROWS_AS(d_base(kFour, {0, 0, 1, 2}), InvalidInput);
}

TEST_CASE("max_rank") {
  CHECK(max_rank(kFour) == 3);
  CHECK(max_rank({V("1 2 -inf")}) == 1);
  Vec v = V("1 3");
  CHECK(max_rank({v, S("2") * v}) == 1);
}

TEST_CASE("extend_with_tangible") {
  auto e = standard_base(2);
  auto idx = extend_with_tangible(e, V("1 1"));
  CHECK(idx.size() == 1);
  CHECK(idx == std::vector<std::size_t>{0});
  auto s = rows("5 5 0\n5 5 4");
  auto j = extend_with_tangible(s, V("0 1 4"));
  REQUIRE(j.size() == 1);
  CHECK_FALSE(dependent({s[j[0]], V("0 1 4")}));
  CHECK(extend_with_tangible({V("0 -inf")}, V("-inf 0")) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(extend_with_tangible(e, V("1v 1")), InvalidInput);
  CHECK_THROWS_AS(extend_with_tangible(rows("1 1\n2 2"), V("0 1")), InvalidInput);
}

TEST_CASE("saturate") {
  Vec v = V("0 1 3");
  auto s = rows("1 1 2\n1 1 3");
  DepWitness w{V("0 0"), v};
  CHECK(combine(w.coeffs, s) + v == V("1v 1v 3v"));
  auto sat = saturate(v, s, w);
  CHECK(sat.coeffs == V("0 0"));
  CHECK(saturate(v, s, sat) == sat);
  // Standard base: coefficients equal the target values.
  Vec t = V("2 -1 5");
  DepWitness low{t, t};
  CHECK(saturate(t, standard_base(3), low).coeffs == t);
  CHECK(saturate(t, standard_base(3), low, {false}).coeffs == t);
  CHECK_THROWS_AS(saturate(v, s, DepWitness{V("5 -inf"), v}), InvalidInput);
}

TEST_CASE("saturate fast path agrees with the general search") {
  std::mt19937_64 rng(11);
  ScalarGen gen{rng, -3, 3, 0.1, 0.0};
  int compared = 0;
  for (int t = 0; t < 600 && compared < 150; ++t) {
    const std::size_t n = 2 + t % 2;
    std::vector<Vec> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(gen.vec(n));
    Vec v = gen.vec(n);
    if (!is_nonsingular(Mat::from_cols(s))) continue;
    auto w = dependence_on(s, v);
    if (!w || w->support().size() != n) continue;
    auto fast = saturate(v, s, *w);
    auto slow = saturate(v, s, *w, {false});
    REQUIRE(fast == slow);
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("sup_witness") {
  Vec v = V("3 20 20");
  auto s = rows("1 4 3\n2 3 4\n0 20 20");
  DepWitness w1{V("-inf 1 0"), v}, w2{V("2 -inf 0"), v};
  REQUIRE(is_valid(w1, s));
  REQUIRE(is_valid(w2, s));
  auto g = sup_witness(w1, w2);
  CHECK(g.coeffs == V("2 1 0"));
  CHECK(combine(g.coeffs, s) + v == V("3v 20v 20v"));
  CHECK(is_valid(g, s));
  CHECK(sup_witness(w1, w1) == w1);
  CHECK_THROWS_AS(sup_witness(w1, DepWitness{V("2 -inf 0"), V("3 20 21")}), InvalidInput);
}

TEST_CASE("sum_saturated") {
  auto e = standard_base(2);
  auto a = saturate(V("1 2"), e, DepWitness{V("1 2"), V("1 2")});
  auto b = saturate(V("2 1"), e, DepWitness{V("2 1"), V("2 1")});
  auto sum = sum_saturated(e, a, b);
  CHECK(sum.coeffs == V("2 2"));
  CHECK(sum.target == V("2 2"));
  auto same = sum_saturated(e, a, a);
  CHECK(same.coeffs == a.coeffs);
  CHECK(same.target == V("1v 2v"));
  CHECK_THROWS_AS(sum_saturated(e, DepWitness{V("0 2"), V("1 2")}, b), InvalidInput);
  // Different supports: summing would give (1,-5) for v1 + v2 = v1, but (1,-3) is valid.
  auto g = rows("-1 1 -2\n0 -1 3");
  Vec v1 = V("0 2 0v"), v2 = V("-inf -2v -2");
  auto s1 = saturate(v1, g, DepWitness{V("1 -inf"), v1});
  auto s2 = saturate(v2, g, DepWitness{V("-4 -5"), v2});
  CHECK(s1.coeffs == V("1 -inf"));
  CHECK_THROWS_AS(sum_saturated(g, s1, s2), InvalidInput);
  CHECK(saturate(v1, g, DepWitness{V("1 -5"), v1}).coeffs == V("1 -3"));
}

TEST_CASE("annihilator_set") {
  Mat a = M("4 4 0\n4 4 1\n4 4 2");
  auto ann = annihilator_set(a);
  REQUIRE(ann.size() >= 1);
  for (const auto& x : ann) {
    CHECK(is_tangible(x));
    CHECK(g_annihilates(a, x));
  }
  CHECK(annihilator_set(M("5 5 4\n0 1 4\n0 2 4")).empty());
  auto g = annihilator_set(M("1v 2v\n0v 3v"));
  CHECK(g.size() == 2);
  CHECK_FALSE(dependent(g));
}

TEST_CASE("annihilator_set, randomized") {
  std::mt19937_64 rng(5);
  ScalarGen gen{rng};
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = 1 + t % 3, n = 1 + (t / 3) % 4;
    Mat a = gen.mat(m, n);
    auto ann = annihilator_set(a);
    REQUIRE(ann.size() >= n - rank(a));
    for (const auto& x : ann) {
      REQUIRE(is_tangible(x));
      REQUIRE(g_annihilates(a, x));
    }
    if (!ann.empty()) REQUIRE_FALSE(dependent(ann));
  }
}

TEST_CASE("independence properties, randomized") {
  std::mt19937_64 rng(3);
  ScalarGen gen{rng};
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = 1 + t % 3, n = 1 + (t / 3) % 3;
    std::vector<Vec> s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(gen.vec(n));
    auto w = is_dependent(s);
    // Tangible rescaling preserves (in)dependence.
    std::vector<Vec> scaled;
    for (std::size_t i = 0; i < k; ++i) scaled.push_back(Scalar::tangible(Rational(int(i) * 3 - 2)) * s[i]);
    REQUIRE(dependent(scaled) == w.has_value());
    if (w) {
      REQUIRE(is_valid(*w, s));
      // Swapping a coefficient for a ν-equal tangible keeps validity (tangibles are unique here).
      DepWitness swapped = *w;
      for (auto& c : swapped.coeffs) c = nu_hat(nu(c));
      REQUIRE(is_valid(swapped, s));
    }
    REQUIRE(max_rank(s) <= n);
    REQUIRE(d_base(s).rank <= max_rank(s));
  }
}
