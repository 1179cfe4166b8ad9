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

#ifndef SUPERTROPICAL_TESTS_HELPERS_HPP
#define SUPERTROPICAL_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "supertropical/supertropical.hpp"

namespace st = supertropical;

inline st::Scalar S(const std::string& t) { return st::parse_scalar(t); }
inline st::Vec V(const std::string& t) { return st::parse_vector(t); }
inline st::Mat M(const std::string& t) { return st::parse_matrix(t); }

inline std::vector<st::Vec> rows(const std::string& t) { return st::parse_matrix(t).row_list(); }

// Scalars drawn from {-inf} ∪ {lo..hi} in both layers.
struct ScalarGen {
  std::mt19937_64& rng;
  int lo = -3, hi = 3;
  double zero_p = 0.15, ghost_p = 0.2;

  st::Scalar operator()() {
    std::uniform_real_distribution<double> u(0, 1);
    if (u(rng) < zero_p) return st::Scalar::zero();
    st::Rational v(std::uniform_int_distribution<int>(lo, hi)(rng));
    return u(rng) < ghost_p ? st::Scalar::ghost(v) : st::Scalar::tangible(v);
  }
  st::Vec vec(std::size_t n) {
    st::Vec v(n);
    for (auto& s : v) s = (*this)();
    return v;
  }
  st::Mat mat(std::size_t r, std::size_t c) {
    st::Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)();
    return m;
  }
};

#endif  // SUPERTROPICAL_TESTS_HELPERS_HPP
