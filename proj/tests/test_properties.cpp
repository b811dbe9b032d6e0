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

// Seeded randomized properties. Every generator uses a fixed seed so failures reproduce.

#include <algorithm>
#include <random>

#include "doctest.h"
#include "hopfglue/freestar.hpp"
#include "hopfglue/lattice.hpp"

using namespace hopfglue;
namespace fs = hopfglue::freestar;

namespace {

Scalar small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Scalar x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = small_rational(rng);
  return v;
}

Subspace random_subspace(std::mt19937& rng, std::size_t n, std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> k(0, max_gens);
  std::vector<Vec> gens;
  for (std::size_t i = 0, m = k(rng); i < m; ++i) gens.push_back(random_vec(rng, n));
  return Subspace::span(n, gens);
}

Subspace random_coordinate_subspace(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution pick(0.5);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    if (pick(rng)) gens.push_back(Vec::unit(n, i));
  return Subspace::span(n, gens);
}

fs::Word random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  fs::Word w(len(rng));
  for (auto& l : w) l = static_cast<fs::Letter>(letter(rng));
  return w;
}

// Rewrites at a randomly chosen redex until none is left.
fs::Word random_reduction(fs::Word w, std::mt19937& rng) {
  for (auto r = fs::redex_positions(w); !r.empty(); r = fs::redex_positions(w)) {
    std::uniform_int_distribution<std::size_t> pick(0, r.size() - 1);
    w = fs::rewrite_at(w, r[pick(rng)]);
  }
  return w;
}

fs::NCPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 3);
  std::vector<std::pair<fs::Word, Scalar>> terms;
  for (int i = 0, m = count(rng); i < m; ++i) terms.emplace_back(random_word(rng, 4), small_rational(rng));
  return fs::NCPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("random coordinate families have partitioned bases") {
  std::mt19937 rng(20240611);
  constexpr std::size_t n = 8;
  std::uniform_int_distribution<std::size_t> members(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Subspace> ms;
    for (std::size_t i = 0, m = members(rng); i < m; ++i) ms.push_back(random_coordinate_subspace(rng, n));
    SubspaceFamily f(n, ms);
    LatticeClosure c = lattice_closure(f);
    REQUIRE(c.complete);
    CHECK(is_distributive(c));
    PartitionedBasis b = partitioned_basis(f);
    CHECK(verify_partition_property(f, b));
    CHECK(b.flattened().size() == n);
    // Independent check of every Gamma against the blocks of its supersets.
    const IndexMask full = (IndexMask{1} << f.size()) - 1;
    for (IndexMask g = 0; g <= full; ++g) {
      std::vector<Vec> gens;
      for (IndexMask s = 0; s <= full; ++s)
        if ((s & g) == g) gens.insert(gens.end(), b.block(s).begin(), b.block(s).end());
      CHECK(Subspace::span(n, gens) == family_intersection(f, g));
    }
  }
}

TEST_CASE("modular law") {
  std::mt19937 rng(7);
  constexpr std::size_t n = 6;
  for (int trial = 0; trial < 60; ++trial) {
    Subspace a = random_subspace(rng, n, 2);
    Subspace b = random_subspace(rng, n, 3);
    Subspace c = sum(a, random_subspace(rng, n, 3));
    REQUIRE(c.contains(a));
    CHECK(sum(a, intersect(b, c)) == intersect(sum(a, b), c));
    CHECK(intersect(a, b).dim() + sum(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("normal form is independent of the rewrite order") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    fs::Word w = random_word(rng, 12);
    const fs::Word expected = fs::nf(w);
    CHECK(fs::redex_positions(expected).empty());
    for (int k = 0; k < 4; ++k) CHECK(random_reduction(w, rng) == expected);
    CHECK(fs::nf(expected) == expected);
    CHECK(fs::parse_word(fs::to_string(w)) == w);
  }
}

TEST_CASE("polynomial multiplication is associative and distributive") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    fs::NCPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(fs::nf(a * b) == a * b);
  }
}

TEST_CASE("phi hat is odd under a half turn") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(1, 9 * 16);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar q(num(rng), 64);
    q.canonicalize();
    if (q < Scalar(1, 4)) continue;
    Scalar shifted = q + 1;
    if (shifted > Scalar(9, 4)) shifted -= 2;
    for (int which : {1, 2}) CHECK(fs::phi_hat(which, shifted) == -fs::phi_hat(which, q));
  }
  CHECK(fs::phi_hat(1, parse_scalar("1/4")) == fs::phi_hat(1, parse_scalar("9/4")));
  CHECK(fs::phi_hat(2, parse_scalar("1/4")) == fs::phi_hat(2, parse_scalar("9/4")));
}

TEST_CASE("solve and rref agree with direct substitution") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vec(rng, c));
    Mat m = Mat::from_rows(c, rows);
    Mat e = rref(m);
    CHECK(rref(e) == e);
    CHECK(Subspace::row_space(e) == Subspace::row_space(m));
    CHECK(rank(m) + kernel(m).dim() == c);
    for (const Vec& k : kernel(m).basis()) CHECK((m * k).is_zero());
    Vec x = random_vec(rng, c);
    Vec y = m * x;
    auto s = solve(m, y);
    REQUIRE(s);
    CHECK(m * *s == y);
    if (rank(m) < r) {
      // Some right-hand side lies outside the column space.
      bool found = false;
      for (std::size_t i = 0; i < r && !found; ++i)
        if (!solve(m, Vec::unit(r, i))) found = true;
      CHECK(found);
    }
  }
}
