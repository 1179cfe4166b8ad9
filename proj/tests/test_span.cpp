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

#include <algorithm>

#include "helpers.hpp"

using namespace supertropical;

TEST_CASE("spans reproduces the worked instances") {
  auto w = spans(rows("1 1\n2 3"), V("4 5"));
  REQUIRE(w);
  CHECK(w->coeffs == V("2 2"));
  CHECK(w->ghost_part == V("-inf -inf"));
  CHECK_FALSE(spans({V("1v 3")}, V("1 3v")));
  auto a = spans({V("1 2")}, V("1 3v"));
  REQUIRE(a);
  CHECK(a->coeffs == V("0"));
  CHECK(a->ghost_part == V("-inf 3v"));
  CHECK(spans({V("1 3")}, V("1 3v")));
  // Sum of the two spanners does not span.
  CHECK(V("1 2") + V("1 3") == V("1v 3"));
}

TEST_CASE("a member is spanned by its own set") {
  auto s = rows("0 -inf 2\n1 1 1\n-inf 3v 0");
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto w = spans(s, s[i]);
    REQUIRE(w);
    CHECK(is_valid(*w, s, s[i]));
  }
  auto w = spans(s, s[0]);
  CHECK(w->coeffs[0] == Scalar::one());
}

TEST_CASE("spans_set") {
  auto s = rows("1 2\n0 -inf");
  CHECK(spans_set(s, s));
  CHECK(spans_set(standard_base(3), rows("1 -2 7\n0v 1 -inf\n3 3 3")));
  CHECK_FALSE(spans_set({V("1 1v")}, {V("1 1")}));
  CHECK_THROWS_AS(spans_set(s, {V("1")}), ShapeMismatch);
}

TEST_CASE("critical elements") {
  CHECK(is_critical(0, standard_base(2)));
  CHECK_FALSE(is_critical(2, rows("0 -inf\n-inf 0\n0 0")));
  CHECK(is_critical(0, rows("1 1\n1v 1\n1 1v")));
  CHECK_THROWS_AS(is_critical(5, standard_base(2)), InvalidInput);
}

TEST_CASE("s_base") {
  auto r = s_base(rows("0 -inf\n-inf 0\n0 0"));
  CHECK(r.indices == std::vector<std::size_t>{0, 1});
  CHECK(r.kind == BaseKind::s_base);
  auto d = s_base(rows("2 -inf -inf\n-inf -1 -inf\n-inf -inf 5\n1 2 3\n-inf 0 0\n-inf -inf -inf"));
  CHECK(d.indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(d.normalized == standard_base(3));
  // (1v,1) = (1,1) + (1v,-inf) is spanned by (1,1), so it is removed.
  auto g = s_base(rows("1 1\n1v 1\n1 1v"));
  CHECK(g.indices == std::vector<std::size_t>{0});
}

TEST_CASE("thickness") {
  auto v = rows("0 1\n2 0\n1 1");
  std::vector<Vec> scaled;
  for (const auto& x : v) scaled.push_back(S("3") * x);
  CHECK(is_thick(scaled, v));
  CHECK(is_thick(rows("4 0\n0 4"), standard_base(2)));
  CHECK_FALSE(is_thick({V("1 1")}, standard_base(2)));
}

TEST_CASE("generalized permutations and change of base") {
  CHECK(is_generalized_permutation(M("-inf 2\n7 -inf")));
  CHECK_FALSE(is_generalized_permutation(M("0 0\n-inf 0")));
  CHECK(is_generalized_permutation(Mat::identity(3)));
  CHECK_FALSE(is_generalized_permutation(M("0v -inf\n-inf 0")));
  CHECK(change_of_base(Mat::identity(2), M("2 -inf\n-inf 3")) == M("2 -inf\n-inf 3"));
  CHECK(change_of_base(Mat::identity(2), M("-inf 3\n5 -inf")) == M("-inf 3\n5 -inf"));
  CHECK_THROWS_AS(change_of_base(Mat::identity(2), M("0 0\n-inf 0")), NoChangeOfBase);
}

TEST_CASE("almost tangible") {
  CHECK(is_almost_tangible(V("1 -2 3"), standard_base(3)));
  CHECK(is_almost_tangible(V("1 1v"), rows("1 1v\n0 1")));
  CHECK_FALSE(is_almost_tangible(V("1v 1v"), rows("1 1v\n0 1")));
  CHECK_FALSE(is_almost_tangible(V("1v 1"), rows("1 1\n1v 1\n1 1v")));
  CHECK(is_almost_tangible(V("1 1"), rows("1 1\n1v 1\n1 1v")));
}

namespace {
std::vector<Vec> random_spanning_set(std::mt19937_64& rng, std::size_t n) {
  ScalarGen gen{rng, -2, 2, 0.3, 0.15};
  std::vector<Vec> s;
  const std::size_t base = 1 + rng() % 3;
  while (s.size() < base) {
    Vec v = gen.vec(n);
    if (!is_zero(v)) s.push_back(v);
  }
  const std::size_t extra = rng() % 3;
  for (std::size_t e = 0; e < extra; ++e) {
    Vec c(n);
    for (std::size_t i = 0; i < base; ++i)
      if (rng() % 2) c = c + Scalar::tangible(Rational(int(rng() % 5) - 2)) * s[i];
    if (!is_zero(c)) s.push_back(c);
  }
  return s;
}

std::vector<Vec> sorted(std::vector<Vec> v) {
  std::sort(v.begin(), v.end(), [](const Vec& a, const Vec& b) { return print_vector(a) < print_vector(b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}
}  // namespace

TEST_CASE("span properties, randomized") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + t % 3;
    auto s = random_spanning_set(rng, n);
    // Closure of the spanned set under sum and scaling.
    Vec a = s[rng() % s.size()], b = s[rng() % s.size()];
    REQUIRE(spans(s, a + b));
    REQUIRE(spans(s, S("5/2") * a));
    // Uniqueness of the s-base up to scalars.
    auto base = s_base(s);
    REQUIRE(spans_set(std::vector<Vec>(base.normalized), s));
    REQUIRE(base.normalized.size() >= max_rank(s));
    std::vector<Vec> shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i < shuffled.size(); ++i)
      shuffled[i] = Scalar::tangible(Rational(int(i) - 1)) * shuffled[i];
    REQUIRE(sorted(s_base(shuffled).normalized) == sorted(base.normalized));
    // Every spanning set contains the critical classes.
    std::vector<Vec> crit;
    for (auto i : critical_indices(s)) crit.push_back(normalize_projective(s[i]));
    REQUIRE(sorted(crit) == sorted(base.normalized));
    for (const auto& b : base.normalized)
      if (!is_ghost(b)) REQUIRE(is_almost_tangible(b, s));
  }
}
