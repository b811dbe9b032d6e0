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
#include "hopfglue/exactla.hpp"

using namespace hopfglue;

TEST_CASE("scalar text") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK(to_string(Scalar(5)) == "5");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("x"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_CASE("vector arithmetic") {
  Vec a{1, 2, 3};
  Vec b{0, -2, 1};
  CHECK(a + b == Vec{1, 0, 4});
  CHECK(dot(a, b) == -1);
  CHECK(Vec(3).is_zero());
  CHECK(b.leading_index() == 1);
  CHECK(concat(a, b).dim() == 6);
  CHECK_THROWS_AS(a + Vec(2), Error);
}

TEST_CASE("sparse matrices") {
  Mat m = Mat::dense({{1, 2}, {0, 0}, {3, 4}});
  CHECK(m.nnz() == 4);
  CHECK(m.transpose().transpose() == m);
  CHECK(m * Vec{1, 1} == Vec{3, 0, 7});
  CHECK((Mat::identity(3) * m) == m);
  m.set(0, 0, 0);
  CHECK(m.nnz() == 3);
  CHECK(m.vstack(m).rows() == 6);
  CHECK(m.hstack(m).cols() == 4);
}

TEST_CASE("reduced row echelon form is canonical") {
  Mat a = Mat::dense({{2, 4, 6}, {1, 2, 4}, {3, 6, 10}});
  RrefResult r = rref_full(a);
  CHECK(r.pivots == std::vector<std::size_t>{0, 2});
  CHECK(r.reduced == Mat::dense({{1, 2, 0}, {0, 0, 1}}));
  CHECK(rank(a) == 2);
  Mat shuffled = Mat::dense({{3, 6, 10}, {2, 4, 6}, {0, 0, 0}});
  CHECK(rref_full(shuffled).reduced == r.reduced);
}

TEST_CASE("subspaces") {
  std::vector<Vec> gens{{1, 1, 0}, {2, 2, 0}, {0, 1, 1}};
  Subspace s = Subspace::span(3, gens);
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec{1, 2, 1}));
  CHECK_FALSE(s.contains(Vec{1, 0, 0}));
  auto c = s.coordinates(Vec{1, 2, 1});
  REQUIRE(c);
  CHECK(s.basis_matrix() * *c == Vec{1, 2, 1});
  CHECK(s.coordinate_matrix() * Vec{1, 2, 1} == *c);

  std::vector<Vec> xy{{1, 0, 0}, {0, 1, 0}};
  std::vector<Vec> yz{{0, 1, 0}, {0, 0, 1}};
  Subspace a = Subspace::span(3, xy), b = Subspace::span(3, yz);
  CHECK(intersect(a, b).dim() == 1);
  CHECK(sum(a, b).dim() == 3);
  CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
  Subspace comp = complement_in(intersect(a, b), a);
  CHECK(comp.dim() == 1);
  CHECK(intersect(comp, b).dim() == 0);
}

TEST_CASE("kernels, images and solving") {
  Mat m = Mat::dense({{1, 1, 0}, {0, 0, 1}});
  CHECK(kernel(m).dim() == 1);
  CHECK(image(m).dim() == 2);
  auto x = solve(m, Vec{2, 5});
  REQUIRE(x);
  CHECK(*x == Vec{2, 0, 5});  // the free variable is zero
  CHECK_FALSE(solve(Mat::dense({{1, 1}, {1, 1}}), Vec{1, 2}));
  std::vector<Vec> line{{1, 0}};
  CHECK(preimage(m, Subspace::span(2, line)).dim() == 2);
  CHECK(solve(Mat(0, 0), Vec()).has_value());
}

TEST_CASE("inverse") {
  Mat m = Mat::dense({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Mat::identity(2));
  CHECK_FALSE(inverse(Mat::dense({{1, 2}, {2, 4}})));
  CHECK(inverse(Mat(0, 0)).has_value());
}

TEST_CASE("linear quotients") {
  std::vector<Vec> w{{1, 1, 0}};
  LinearQuotient q = linear_quotient(Subspace::span(3, w));
  CHECK(q.dim() == 2);
  CHECK((q.projection * Vec{1, 1, 0}).is_zero());
  CHECK(q.projection * q.section == Mat::identity(2));
}

TEST_CASE("independent sets") {
  IndependentSet s(3);
  CHECK(s.try_add(Vec{1, 2, 0}));
  CHECK_FALSE(s.try_add(Vec{2, 4, 0}));
  CHECK(s.try_add(Vec{0, 1, 1}));
  CHECK_FALSE(s.is_independent(Vec{1, 3, 1}));
  CHECK(s.size() == 2);
}

TEST_CASE("maps on subspaces") {
  std::vector<Vec> dom{{1, 0, 0}, {0, 1, 1}};
  Subspace d = Subspace::span(3, dom);
  std::vector<Vec> values{{1}, {2}};
  SubspaceMap f = SubspaceMap::from_basis_images(d, dom, values, 1);
  CHECK(f.apply(Vec{1, 1, 1}) == Vec{3});
  CHECK_THROWS_AS(f.apply(Vec{0, 1, 0}), Error);
  Mat ext = f.extended_matrix();
  CHECK(ext * Vec{1, 1, 1} == Vec{3});
  CHECK(f.image().dim() == 1);
}
