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

#include <limits>

#include "supertropical/rational.hpp"

using supertropical::Rational;

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3").to_string() == "3");
  CHECK(Rational::parse("-6/4").to_string() == "-3/2");
  CHECK(Rational::parse("+2/1").to_string() == "2");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("-"));
}

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(-a == Rational(-1, 2));
  CHECK(a * 4 == Rational(2));
  CHECK(a > b);
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("rational promotes past 64 bits and demotes back") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  Rational x(big);
  Rational y = x + x;
  CHECK_FALSE(y.is_small());
  CHECK(y.to_string() == "18446744073709551614");
  Rational z = y - x;
  CHECK(z.is_small());
  CHECK(z == x);
  CHECK(y > x);
  Rational w = Rational(big) * Rational(big);
  CHECK_FALSE(w.is_small());
  CHECK((w - w) == Rational(0));
  CHECK(Rational(std::numeric_limits<std::int64_t>::min()) - Rational(1) < Rational(std::numeric_limits<std::int64_t>::min()));
  CHECK(-Rational(std::numeric_limits<std::int64_t>::min()) == Rational(big) + Rational(1));
}

TEST_CASE("rational hashing agrees with equality") {
  std::hash<Rational> h;
  CHECK(h(Rational(2, 4)) == h(Rational(1, 2)));
}
