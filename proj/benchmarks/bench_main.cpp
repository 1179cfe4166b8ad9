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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "supertropical/supertropical.hpp"

using namespace supertropical;

namespace {

Scalar draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> val(-9, 9), layer(0, 9);
  const int l = layer(rng);
  if (l == 0) return Scalar::zero();
  return l == 1 ? Scalar::ghost(val(rng)) : Scalar::tangible(val(rng));
}

Mat random_mat(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = draw(rng);
  return m;
}

void BM_Permanent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat a = random_mat(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}
BENCHMARK(BM_Permanent)->DenseRange(2, 14, 3);

void BM_BrutePermanent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat a = random_mat(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_permanent(a));
}
BENCHMARK(BM_BrutePermanent)->DenseRange(2, 8, 2);

void BM_Nabla(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat a = Mat::identity(n);
  for (std::uint64_t s = 2; !is_nonsingular(a = random_mat(n, n, s)); ++s) {
  }
  for (auto _ : state) benchmark::DoNotOptimize(nabla(a));
}
BENCHMARK(BM_Nabla)->DenseRange(2, 8, 2);

void BM_IsDependent(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  auto s = random_mat(k, 4, 3).row_list();
  for (auto _ : state) benchmark::DoNotOptimize(is_dependent(s));
}
BENCHMARK(BM_IsDependent)->DenseRange(2, 5, 1);

void BM_Saturate(benchmark::State& state) {
  const bool fast = state.range(0) != 0;
  auto gens = Mat::from_rows({{Scalar::tangible(1), Scalar::tangible(1), Scalar::tangible(2)},
                              {Scalar::tangible(1), Scalar::tangible(1), Scalar::tangible(3)}})
                  .row_list();
  Vec v = {Scalar::tangible(0), Scalar::tangible(1), Scalar::tangible(3)};
  DepWitness w{{Scalar::tangible(0), Scalar::tangible(0)}, v};
  for (auto _ : state) benchmark::DoNotOptimize(saturate(v, gens, w, {fast}));
}
BENCHMARK(BM_Saturate)->Arg(0)->Arg(1);

void BM_Spans(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  auto gens = random_mat(k, 3, 4).row_list();
  Vec v = gens.front() + gens.back();
  for (auto _ : state) benchmark::DoNotOptimize(spans(gens, v));
}
BENCHMARK(BM_Spans)->DenseRange(2, 6, 2);

void BM_SBase(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  auto gens = random_mat(k, 3, 5).row_list();
  for (auto _ : state) benchmark::DoNotOptimize(s_base(gens));
}
BENCHMARK(BM_SBase)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
