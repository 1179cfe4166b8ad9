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

TEST_CASE("scalar tokens") {
  CHECK(parse_scalar("-inf").is_zero());
  CHECK(parse_scalar("-infv").is_zero());
  CHECK(parse_scalar("3") == Scalar::tangible(3));
  CHECK(parse_scalar("3v") == Scalar::ghost(3));
  CHECK(parse_scalar("-1/2v") == Scalar::ghost(Rational::parse("-1/2")));
  CHECK(print_scalar(Scalar::ghost(Rational::parse("5/3"))) == "5/3v");
  CHECK(print_scalar(Scalar::zero()) == "-inf");
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(parse_scalar("3vv"), ParseError);
}

TEST_CASE("matrix round trip") {
  const std::string text = "0 1v -inf\n-2/3 4 5v\n";
  auto m = parse_matrix(text);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(parse_matrix(print_matrix(m)) == m);
  std::mt19937_64 rng(8);
  ScalarGen gen{rng, -9, 9, 0.2, 0.3};
  for (int t = 0; t < 50; ++t) {
    auto r = gen.mat(1 + t % 4, 1 + t % 3);
    CHECK(parse_matrix(print_matrix(r)) == r);
    auto v = gen.vec(1 + t % 5);
    CHECK(parse_vector(print_vector(v)) == v);
  }
}

TEST_CASE("comments and blank lines") {
  auto m = parse_matrix("# header\n\n1 2\n  # indented comment\n\n3 4\n");
  CHECK(m == M("1 2\n3 4"));
  CHECK_THROWS_AS(parse_matrix("1 2 # trailing\n"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_matrix("1 2\n3 bad\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_matrix("1 2\n3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_vector("1 2\n3 4"), ParseError);
}
