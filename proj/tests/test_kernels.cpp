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

#include <random>

#include "doctest.h"
#include "hopfglue/hopf.hpp"
#include "hopfglue/kernels.hpp"
#include "hopfglue/lattice.hpp"

using namespace hopfglue;

TEST_CASE("serial and parallel elimination agree") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> val(-4, 4), size(1, 14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(size(rng)), cols = static_cast<std::size_t>(size(rng));
    std::vector<Mat::Row> data(rows);
    for (auto& row : data)
      for (std::size_t c = 0; c < cols; ++c)
        if (int v = val(rng); v != 0 && (v % 2 == 0)) row.emplace_back(c, Scalar(v, 3));
    auto a = data, b = data;
    auto pa = kernels::rref_rows(a, cols, kernels::Mode::serial);
    auto pb = kernels::rref_rows(b, cols, kernels::Mode::parallel);
    CHECK(pa == pb);
    CHECK(a == b);
  }
}

TEST_CASE("serial and parallel associativity checks agree") {
  for (HopfPtr h : {group_hopf(symmetric_group3()), function_hopf(cyclic_group(4))}) {
    const auto& t = h->algebra().table();
    CHECK_FALSE(kernels::associativity_failure(t, h->dim(), kernels::Mode::serial));
    CHECK_FALSE(kernels::associativity_failure(t, h->dim(), kernels::Mode::parallel));
  }
  // e0 e0 = e1, e1 e0 = e0, other products zero: (e0 e0) e0 = e0 but e0 (e0 e0) = 0.
  std::vector<Vec> table(4, Vec(2));
  table[0] = Vec{0, 1};
  table[2] = Vec{1, 0};
  auto s = kernels::associativity_failure(table, 2, kernels::Mode::serial);
  auto p = kernels::associativity_failure(table, 2, kernels::Mode::parallel);
  REQUIRE(s);
  CHECK(s == p);
}

TEST_CASE("serial and parallel distributivity checks agree") {
  std::vector<Vec> l1{{1, 0}}, l2{{0, 1}}, l3{{1, 1}};
  SubspaceFamily lines(2, {Subspace::span(2, l1), Subspace::span(2, l2), Subspace::span(2, l3)});
  LatticeClosure c = lattice_closure(lines);
  auto s = kernels::distributivity_failure(c.join, c.meet, kernels::Mode::serial);
  auto p = kernels::distributivity_failure(c.join, c.meet, kernels::Mode::parallel);
  REQUIRE(s);
  CHECK(s == p);
}
