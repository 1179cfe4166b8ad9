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

TEST_CASE("addition") {
  CHECK(S("3") + S("2") == S("3"));
  CHECK(S("3") + S("3") == S("3v"));
  CHECK(S("2v") + S("3") == S("3"));
  CHECK(S("3") + S("3v") == S("3v"));
  CHECK(S("-inf") + S("2v") == S("2v"));
}

TEST_CASE("multiplication") {
  CHECK(S("1") * S("2") == S("3"));
  CHECK(S("1v") * S("2") == S("3v"));
  CHECK(S("-inf") * S("5v") == S("-inf"));
  CHECK(Scalar::one() * S("1/2v") == S("1/2v"));
}

TEST_CASE("nu and nu_hat") {
  CHECK(nu(S("3")) == S("3v"));
  CHECK(nu(S("3v")) == S("3v"));
  CHECK(nu_hat(S("3v")) == S("3"));
  CHECK(nu_hat(S("-inf")) == S("-inf"));
  CHECK(nu(Scalar::one()) == Scalar::ghost(0));
}

TEST_CASE("ghost surpassing") {
  CHECK(ghost_surpasses(S("3v"), S("2")));
  CHECK_FALSE(ghost_surpasses(S("2"), S("3v")));
  CHECK(ghost_surpasses(S("2"), S("2")));
  CHECK_FALSE(ghost_surpasses(S("2v"), S("3v")));
  CHECK(ghost_surpasses(S("-inf"), S("-inf")));
  CHECK_FALSE(ghost_surpasses(S("-inf"), S("1")));
}

TEST_CASE("ghost dependence") {
  CHECK(gd(S("1"), S("3v")));
  CHECK_FALSE(gd(S("1"), S("2")));
  for (const char* a : {"-inf", "0", "2v", "-1/3"}) CHECK(gd(S(a), S(a)));
}

TEST_CASE("pow") {
  CHECK(pow(S("2"), 3) == S("6"));
  CHECK(pow(S("2v"), 2) == S("4v"));
  CHECK(pow(S("1") + S("2"), 3) == pow(S("1"), 3) + pow(S("2"), 3));
  CHECK(pow(S("-inf"), 4) == S("-inf"));
  CHECK_THROWS_AS(pow(S("1"), 0), InvalidInput);
}

TEST_CASE("layer predicates") {
  CHECK(Scalar::zero().is_ghost0());
  CHECK(Scalar::zero().is_tangible0());
  CHECK(S("1v").is_ghost0());
  CHECK_FALSE(S("1v").is_tangible0());
  CHECK_THROWS_AS(static_cast<void>(S("-inf").value()), InvalidInput);
}

TEST_CASE("semiring laws, randomized") {
  std::mt19937_64 rng(0);
  ScalarGen gen{rng};
  for (int t = 0; t < 3000; ++t) {
    Scalar a = gen(), b = gen(), c = gen();
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    Scalar s = a + b;
    REQUIRE((s == a || s == b || s == nu(a)));
    if (a.is_tangible()) REQUIRE((s == nu(a)) == nu_equal(a, b));
    REQUIRE(nu(a + b) == nu(a) + nu(b));
    REQUIRE(nu(a * b) == nu(a) * nu(b));
    if (ghost_surpasses(a, b)) REQUIRE(gd(a, b));
    if (ghost_surpasses(a, b) && ghost_surpasses(b, a)) REQUIRE(a == b);
    if (ghost_surpasses(a, b) && ghost_surpasses(b, c)) REQUIRE(ghost_surpasses(a, c));
    for (int m = 1; m <= 6; ++m) REQUIRE(pow(a + b, m) == pow(a, m) + pow(b, m));
  }
}
