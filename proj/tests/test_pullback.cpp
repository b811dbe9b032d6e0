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
#include "oracle_pointwise.hpp"

using namespace hopfglue;

TEST_CASE("E1 is a covering") {
  const OrbitInstance e1 = e1_instance();
  CoveringReport r = check_covering(e1.covering);
  CHECK(r.pass());
  CHECK(r.duplicate_kernels.empty());
  // Brute force: ker pi_i is the functions supported on orbit i.
  SubspaceFamily k = e1.covering.kernel_family();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(k.members[i].dim() == 2);
    std::vector<std::size_t> others;
    for (std::size_t o = 0; o < 3; ++o)
      if (o != i) others.push_back(o);
    for (const Vec& v : k.members[i].basis()) CHECK(oracle::vanishes_on(oracle::Fn(v.begin(), v.end()), others));
  }
}

TEST_CASE("duplicated kernels fail the trivial-intersection condition") {
  const OrbitInstance e1 = e1_instance();
  CoveringReport r = check_covering(duplicated_kernel_covering(e1));
  CHECK_FALSE(r.trivial_intersection);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.intersection_witness.is_zero());
  for (const auto& m : duplicated_kernel_covering(e1).maps) CHECK((m.matrix() * r.intersection_witness).is_zero());
  CHECK(r.duplicate_kernels.size() == 3);
}

TEST_CASE("canonical gluing of E1 satisfies the cocycle conditions") {
  const OrbitInstance e1 = e1_instance();
  GluingFamily g = canonical_gluing(e1.covering);
  CHECK(g.size() == 3);
  CHECK(g.target(0, 1)->dim() == 2);
  CocycleReport r = check_cocycle(g);
  CHECK(r.pass);
  CHECK(r.triples_checked > 0);
  CHECK(g.has_coactions());
}

TEST_CASE("a sign-swapped gluing map fails the composition identity") {
  const OrbitInstance e3 = e3_instance();
  GluingFamily g = canonical_gluing(e3.covering);
  CHECK(check_cocycle(g).pass);
  // Act by -1 on the triple-overlap orbit inside A_01 only.
  GluingFamily bad = swap_perturbed(g, e3, 0, 1, 3);
  CocycleReport r = check_cocycle(bad);
  CHECK_FALSE(r.pass);
  bool cond2 = false;
  for (const auto& f : r.failures)
    if (f.condition == 2) {
      cond2 = true;
      CHECK(f.i != f.j);
      CHECK(f.j != f.k);
      CHECK_FALSE(f.witness.is_zero());
    }
  CHECK(cond2);
  CHECK(cocycle_isomorphism(g, 0, 1, 2).has_value());
}

TEST_CASE("multi-pullback of E1 is isomorphic to P") {
  const OrbitInstance e1 = e1_instance();
  GluingFamily g = canonical_gluing(e1.covering);
  MultiPullback m = multipullback(g);
  CHECK(m.dim() == 6);
  IsomorphismReport iso = check_pullback_isomorphism(e1.covering, m);
  CHECK(iso.pass());
  REQUIRE(m.comodule);
  CHECK(coinvariants(*m.comodule).dim() == 3);
  // A tuple that disagrees on an overlap is rejected.
  std::vector<Vec> parts;
  for (std::size_t i = 0; i < 3; ++i) parts.push_back(e1.covering.pieces[i]->algebra().unit());
  CHECK(m.try_from_tuple(parts).has_value());
  parts[0] = Vec(4);
  CHECK_FALSE(m.try_from_tuple(parts).has_value());
  CHECK_THROWS_AS(m.from_tuple(parts), Error);
}

TEST_CASE("induced coactions and piecewise preconditions") {
  const OrbitInstance e1 = e1_instance();
  ComodulePtr c = induced_coaction(*e1.total, e1.covering.maps[0]);
  CHECK(c->dim() == 4);
  CHECK(coinvariants(*c).dim() == 2);
  std::vector<std::optional<StrongConnection>> conns(e1.connections.begin(), e1.connections.end());
  PiecewiseReport r = check_piecewise_preconditions(e1.covering, conns);
  CHECK(r.pass());
  for (auto p : r.principality) CHECK(p == Principality::verified);
  conns[1].reset();
  PiecewiseReport partial = check_piecewise_preconditions(e1.covering, conns);
  CHECK(partial.principality[1] == Principality::unverified);
  CHECK(to_string(Principality::unverified) == "unverified");
}

TEST_CASE("gluing families are validated") {
  const OrbitInstance e1 = e1_instance();
  GluingFamily g = canonical_gluing(e1.covering);
  auto maps = g.maps();
  maps.erase({0, 1});
  CHECK_THROWS_AS(GluingFamily(g.components(), g.targets(), maps), Error);
}
