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
#include "hopfglue/splitting.hpp"

using namespace hopfglue;

namespace {

bool splits(const Splitting& s) {
  const std::size_t n = s.section.domain().ambient_dim();
  for (const Vec& b : s.section.domain().basis())
    if (s.pi * s.apply(b) != b) return false;
  return n == s.pi.rows();
}

std::vector<std::optional<StrongConnection>> optional_connections(const OrbitInstance& inst) {
  return {inst.connections.begin(), inst.connections.end()};
}

}  // namespace

TEST_CASE("subspace-respecting splittings") {
  AlgebraPtr a = function_algebra(3);
  Mat pi = Mat::dense({{1, 0, 0}, {0, 1, 0}});
  std::vector<Vec> g0{Vec::unit(3, 0)}, g1{Vec::unit(3, 1), Vec::unit(3, 2)};
  SubspaceFamily fam(3, {Subspace::span(3, g0), Subspace::span(3, g1)});
  Splitting s = subspace_respecting_splitting(pi, fam);
  CHECK(splits(s));
  for (std::size_t i = 0; i < 2; ++i) {
    Subspace img = image(pi, fam.members[i]);
    for (const Vec& v : img.basis()) CHECK(fam.members[i].contains(s.apply(v)));
  }
  Splitting u = unitalize(s, *a, *function_algebra(2));
  CHECK(u.unital);
  CHECK(u.apply(Vec{1, 1}) == a->unit());
  CHECK(splits(u));
}

TEST_CASE("coinvariant and colinear splittings on an E1 piece") {
  const OrbitInstance e1 = e1_instance();
  GluingFamily g = canonical_gluing(e1.covering);
  const ComoduleAlgebra& a = *g.component_coaction(0);
  const ComoduleAlgebra& b = *g.target_coaction(0, 1);
  const Mat& pi = g.map(0, 1).matrix();
  Splitting co = coinvariant_splitting(pi, a, b, std::nullopt);
  CHECK(co.section.domain() == coinvariants(b));
  Splitting col = colinearize(co, e1.connections[0], pi, a, b);
  CHECK(col.colinear);
  CHECK(splits(col));
  Splitting unit = unitalize(col, a, b);
  CHECK(unit.unital);
  CHECK(is_colinear(unit.section, b, a));
}

TEST_CASE("global splittings on E1 for every piece and both orders") {
  const OrbitInstance e1 = e1_instance();
  GluingFamily g = canonical_gluing(e1.covering);
  MultiPullback m = multipullback(g);
  GluingSplittings gs = gluing_splittings(g, optional_connections(e1));
  CHECK_FALSE(find_kernel_condition_violation(g, gs.alphas));
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) others.push_back(j);
    for (bool reversed : {false, true}) {
      std::vector<std::size_t> kappa{i, reversed ? others[1] : others[0], reversed ? others[0] : others[1]};
      Splitting s = global_splitting(m, gs.alphas, gs.betas, i, kappa, {.debug_checkpoints = true});
      CHECK(splits(s));
      CHECK(s.unital);
      CHECK(s.colinear);
      CHECK(is_colinear(s.section, *g.component_coaction(i), *m.comodule));
    }
  }
  CHECK(default_order(3, 1) == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("a splitting that violates the kernel condition is rejected") {
  const OrbitInstance e1 = e1_instance();
  GluingFamily g = canonical_gluing(e1.covering);
  MultiPullback m = multipullback(g);
  GluingSplittings gs = gluing_splittings(g, optional_connections(e1));
  SplittingTable bad = gs.alphas;
  // The unital splitting of pi^0_1 extends by the constant and leaves ker pi^0_2.
  bad.at({0, 1}) = gs.betas.at({0, 1});
  auto v = find_kernel_condition_violation(g, bad);
  REQUIRE(v);
  CHECK((*v)[0] == 0);
  CHECK((*v)[1] == 1);
  CHECK((*v)[2] == 2);
  try {
    global_splitting(m, bad, gs.betas, 0, {0, 1, 2});
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
    CHECK(std::string(e.what()).find("kernel condition violated") != std::string::npos);
  }
}

TEST_CASE("orders must be permutations starting at the piece") {
  const OrbitInstance e1 = e1_instance();
  GluingFamily g = canonical_gluing(e1.covering);
  MultiPullback m = multipullback(g);
  GluingSplittings gs = gluing_splittings(g, optional_connections(e1));
  CHECK_THROWS_AS(global_splitting(m, gs.alphas, gs.betas, 0, {1, 0, 2}), Error);
  CHECK_THROWS_AS(global_splitting(m, gs.alphas, gs.betas, 0, {0, 1, 1}), Error);
}

TEST_CASE("covering pipeline data") {
  const OrbitInstance e1 = e1_instance();
  CoveringPipeline p = build_covering_pipeline(e1.covering, e1.connections);
  CHECK(p.pieces.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const PieceData& d = p.pieces[i];
    CHECK(d.V.contains(d.piece->algebra().unit()));
    CHECK(d.alpha.apply(d.piece->algebra().unit()) == p.pullback.algebra()->unit());
    for (const Vec& v : d.V.basis()) CHECK(p.projections[i] * d.alpha.apply(v) == v);
  }
  SubspaceMap r = restrict_map(p.pieces[0].alpha, default_leg_space(e1.connections[0]));
  CHECK(r.domain().dim() <= p.pieces[0].alpha.domain().dim());
}
