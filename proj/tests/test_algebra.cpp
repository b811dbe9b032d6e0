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

#include "doctest.h"
#include "hopfglue/instances.hpp"
#include "hopfglue/tensor.hpp"

using namespace hopfglue;

TEST_CASE("function algebras") {
  AlgebraPtr a = function_algebra(3);
  CHECK(a->dim() == 3);
  CHECK(a->unit() == Vec{1, 1, 1});
  CHECK(a->multiply(Vec{1, 2, 3}, Vec{2, 0, 1}) == Vec{2, 0, 3});
  CHECK(a->left_multiplication(Vec{1, 2, 3}) * Vec{1, 1, 1} == Vec{1, 2, 3});
}

TEST_CASE("structure tables are validated") {
  // e0 e0 = e1, e1 e0 = e0: not associative.
  std::vector<Vec> table(4, Vec(2));
  table[0] = Vec{0, 1};
  table[2] = Vec{1, 0};
  CHECK_THROWS_AS(make_algebra(2, table, Vec{1, 0}), Error);
  // Wrong unit.
  AlgebraPtr f = function_algebra(2);
  CHECK_THROWS_AS(make_algebra(2, f->table(), Vec{1, 0}), Error);
}

TEST_CASE("morphisms, ideals and quotients") {
  AlgebraPtr a = function_algebra(3);
  AlgebraPtr b = function_algebra(2);
  Mat restrict = Mat::dense({{1, 0, 0}, {0, 1, 0}});
  AlgMorphism r(a, b, restrict);
  CHECK(is_surjective(r));
  Ideal k = morphism_kernel(r);
  CHECK(k.space().dim() == 1);
  Quotient q = quotient(k);
  CHECK(q.algebra->dim() == 2);
  CHECK(q.projection->apply(a->unit()) == q.algebra->unit());
  // Not unital.
  CHECK_THROWS_AS(AlgMorphism(a, b, Mat::dense({{1, 0, 0}, {0, 0, 0}})), Error);
  // Not multiplicative: the sum of two point evaluations.
  CHECK_THROWS_AS(AlgMorphism(a, function_algebra(1), Mat::dense({{1, 1, 0}})), Error);
  std::vector<Vec> gens{{1, 1, 0}};
  CHECK_FALSE(is_ideal(*a, Subspace::span(3, gens)));
  CHECK(compose(identity_morphism(b), r).matrix() == restrict);
}

TEST_CASE("products and subalgebras") {
  std::vector<AlgebraPtr> fs{function_algebra(2), function_algebra(1)};
  Product p = direct_product(fs);
  CHECK(p.algebra->dim() == 3);
  CHECK(p.offsets == std::vector<std::size_t>{0, 2});
  CHECK(p.projections[1].apply(Vec{1, 2, 3}) == Vec{3});
  // Diagonal functions on two points form a unital subalgebra.
  std::vector<Vec> diag{{1, 1, 0}, {0, 0, 1}};
  Subalgebra s = make_subalgebra(p.algebra, Subspace::span(3, diag));
  CHECK(s.algebra->dim() == 2);
  CHECK(s.to_ambient(s.to_coordinates(Vec{2, 2, 5})) == Vec{2, 2, 5});
  std::vector<Vec> bad{{1, 0, 0}};
  CHECK_THROWS_AS(make_subalgebra(p.algebra, Subspace::span(3, bad)), Error);
}

TEST_CASE("tensor helpers") {
  Vec a{1, 2}, b{0, 1, 3};
  Vec t = tensor(a, b);
  CHECK(t.dim() == 6);
  CHECK(t[1 * 3 + 2] == 6);
  CHECK(slice_left(t, 2, 3, 2) == Vec{3, 6});
  CHECK(slice_right(t, 2, 3, 1) == Vec{0, 2, 6});
  Mat f = Mat::dense({{0, 1}, {1, 0}});
  CHECK(apply_left(f, t, 3) == tensor(f * a, b));
  CHECK(flip_matrix(2, 3) * t == tensor(b, a));
  CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
}

TEST_CASE("Hopf algebras of finite groups") {
  HopfPtr fs3 = function_hopf(symmetric_group3());
  HopfPtr gs3 = group_hopf(symmetric_group3());
  CHECK(fs3->dim() == 6);
  CHECK_FALSE(is_cocommutative(*fs3));
  CHECK(is_cocommutative(*gs3));
  CHECK(is_cocommutative(*z2_hopf()));
  auto haar = haar_functional(*fs3);
  REQUIRE(haar);
  CHECK(dot(*haar, fs3->unit()) == 1);
  auto haar_g = haar_functional(*gs3);
  REQUIRE(haar_g);
  CHECK(*haar_g == Vec::unit(6, symmetric_group3().identity));
  CHECK_THROWS_AS(make_group_table({{0, 1}, {0, 1}}), Error);
}

TEST_CASE("the Z2 basis {1, u}") {
  HopfPtr h = z2_hopf();
  const auto& g = z2_grouplikes();
  for (const Vec& x : g) {
    CHECK(h->coproduct(x) == tensor(x, x));
    CHECK(h->epsilon(x) == 1);
  }
  CHECK(h->antipode() * g[1] == g[1]);
  CHECK(h->algebra().multiply(g[1], g[1]) == g[0]);
  CHECK_THROWS_AS(GroupLike(h, Vec{1, 1}), Error);
}

TEST_CASE("comodule algebras of free Z2-sets") {
  const OrbitInstance e1 = e1_instance();
  const ComoduleAlgebra& p = *e1.total;
  CHECK(p.dim() == 6);
  CHECK(coinvariants(p).dim() == 3);
  CHECK(homogeneous_component(p, z2_grouplikes()[1]).dim() == 3);
  const Vec tau = section_indicator(3, {0, 1, 2});
  CHECK(p.coact(tau) == tensor(tau, z2_grouplikes()[1]));
  CHECK(sweedler(p, tau).size() == 1);
  std::vector<Vec> seed{Vec::unit(6, 0)};
  Subspace closure = comodule_closure(p, Subspace::span(6, seed));
  CHECK(closure.dim() == 2);
  CHECK(is_subcomodule(p, closure));
  CHECK_FALSE(is_subcomodule(p, Subspace::span(6, seed)));
  RegularInstance reg = regular_instance(function_hopf(symmetric_group3()));
  CHECK(coinvariants(*reg.total).dim() == 1);
}
