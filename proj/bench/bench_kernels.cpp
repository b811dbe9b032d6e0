/*
   Copyright 2026 The hopfglue authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial reference versus OpenMP kernels on deterministic inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "hopfglue/algebra.hpp"
#include "hopfglue/hopf.hpp"
#include "hopfglue/kernels.hpp"
#include "hopfglue/lattice.hpp"

using namespace hopfglue;

namespace {

kernels::Mode mode_of(const benchmark::State& state) {
  return state.range(1) == 0 ? kernels::Mode::serial : kernels::Mode::parallel;
}

std::vector<Mat::Row> random_rows(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-5, 5), keep(0, 2);
  std::vector<Mat::Row> rows(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng) != 0)
        if (int v = val(rng); v != 0) rows[r].emplace_back(c, Scalar(v));
  return rows;
}

void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = random_rows(n, 7);
  for (auto _ : state) {
    auto rows = input;
    benchmark::DoNotOptimize(kernels::rref_rows(rows, n, mode_of(state)));
  }
}

void BM_associativity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AlgebraPtr a = group_hopf(cyclic_group(n))->algebra_ptr();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::associativity_failure(a->table(), n, mode_of(state)));
}

void BM_distributivity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  // Random coordinate subspaces generate a distributive lattice of many elements.
  std::mt19937 rng(11);
  std::bernoulli_distribution bit(0.5);
  std::vector<Subspace> members;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < n; ++j)
      if (bit(rng)) gens.push_back(Vec::unit(n, j));
    members.push_back(Subspace::span(n, gens));
  }
  LatticeClosure c = lattice_closure(SubspaceFamily(n, members));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::distributivity_failure(c.join, c.meet, mode_of(state)));
}

}  // namespace

BENCHMARK(BM_rref)->ArgsProduct({{24, 48}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_associativity)->ArgsProduct({{8, 16}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_distributivity)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
