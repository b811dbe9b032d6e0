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
#include "hopfglue/freestar.hpp"

using namespace hopfglue;
using namespace hopfglue::freestar;

namespace {

const Letter S = Letter::s, T = Letter::s_star, P1 = Letter::phi1, P2 = Letter::phi2;

NCPoly w(std::initializer_list<Letter> letters, Scalar c = 1) { return NCPoly::monomial(Word(letters), c); }

}  // namespace

TEST_CASE("normal form") {
  CHECK(nf(Word{T, S}).empty());
  CHECK(nf(Word{S, T}) == Word{S, T});
  CHECK(nf(Word{T, S, P1, P2}) == Word{P1, P2});
  CHECK(nf(Word{T, T, S, S}).empty());
  CHECK(nf(Word{T, P1, S}) == Word{T, P1, S});
  CHECK(to_string(Word{}) == "1");
  CHECK(to_string(Word{P2, P2}) == "phi2 phi2");
  CHECK(parse_word("phi2 phi2") == Word{P2, P2});
  CHECK(parse_word("s* s").size() == 2);
  CHECK(parse_word("1").empty());
  CHECK_THROWS_AS(parse_word("phi3"), Error);
  CHECK_THROWS_AS(parse_word(""), Error);
  CHECK_THROWS_AS(rewrite_at(Word{S, T}, 0), Error);
}

TEST_CASE("normal form is idempotent and multiplication is associative") {
  const NCPoly a = w({T}) + w({P1}, 2);
  const NCPoly b = w({S, S}) - w({T, P2});
  const NCPoly c = w({S}) + NCPoly::constant(3);
  CHECK(nf(a * b) == a * b);
  CHECK((a * b) * c == a * (b * c));
  CHECK(w({T}) * w({S}) == NCPoly::constant(1));
  CHECK(!(w({S}) * w({T}) == NCPoly::constant(1)));
}

TEST_CASE("grading") {
  const NCPoly p = w({P1}) + w({P1, P2}) + NCPoly::constant(2);
  CHECK(p.even_part() == w({P1, P2}) + NCPoly::constant(2));
  CHECK(p.odd_part() == w({P1}));
  const GradedTensor g = tu(one()) + t1(phi1()) + t1(phi1() * phi2());
  CHECK(g.odd_part() == tu(one()) + t1(phi1()));
  CHECK(g.even_part() == t1(phi1() * phi2()));
  CHECK(tu(one()) * tu(one()) == t1(one()));
}

TEST_CASE("symbol images and the gluing constraints") {
  CHECK(symbol_image(1, t1(phi1())).terms == std::map<TargetMono, Scalar>{{{1, 0, 0}, 1}});
  CHECK(symbol_image(1, t1(phi2())).terms == std::map<TargetMono, Scalar>{{{0, 1, 0}, 1}});
  CHECK(symbol_image(2, t1(phi1())).terms == std::map<TargetMono, Scalar>{{{1, 0, 0}, 1}});
  CHECK(symbol_image(2, t1(phi2())).terms == std::map<TargetMono, Scalar>{{{0, 1, 0}, 1}});
  // u squared is 1 in C(Z2) but t squared is not 1 in C(I).
  CHECK(symbol_image(1, t1(phi1() * phi1())) == symbol_image(1, t1(one())));
  CHECK(!(symbol_image(2, t1(phi1() * phi1())) == symbol_image(2, t1(one()))));
  CHECK_THROWS_AS(symbol_image(1, t1(NCPoly::letter(Letter::s))), Error);

  CHECK(in_pullback(SymElem::unit(all_slots)));
  CHECK(in_pullback(SymElem::of({t1(phi1()), tu(one()), t1(phi2())})));
  CHECK_FALSE(in_pullback(SymElem::of({t1(phi2()), tu(one()), t1(phi2())})));

  // Phi01 is an involution.
  const auto& c01 = constraints()[0];
  TargetPoly x = symbol_image(1, tu(phi2()));
  CHECK(apply_perm(c01.perm, apply_perm(c01.perm, x)) == x);
}

TEST_CASE("symbolic transfers") {
  SymElem x = SymElem::zero(0b001);
  x.slots[0] = tu(one());
  SymElem a = solve_transfer_symbolic(x, 0b010);
  CHECK(a.slots[1] == t1(phi1()));
  SymElem y = SymElem::zero(0b100);
  y.slots[2] = tu(one());
  SymElem f = solve_transfer_symbolic(y, 0b011);
  CHECK(f.slots[0] == t1(phi2()));
  CHECK(f.slots[1] == t1(phi2()));
}

TEST_CASE("Method I reproduces the intermediate and final formulas") {
  MethodOneResult m = method_one();
  CHECK(m.a.slots[1] == t1(phi1()));
  CHECK(m.b.slots[0] == t1(phi1()));
  CHECK(m.a2.slots[0] == t1(phi2()));
  CHECK(m.a2.slots[1] == t1(phi2()));
  CHECK(m.b2.slots[2] == t1(phi1()));
  CHECK(m.c2.slots[2] == t1(phi2()));
  CHECK(m.ell01.at_u == reference_method_one_partial().at_u);
  CHECK(m.ell.at_u == reference_method_one().at_u);
  CHECK(to_json(m.ell).dump() == to_json(reference_method_one()).dump());
  CHECK(verify_symbolic(m.ell01).pass());
  SymbolicReport r = verify_symbolic(m.ell);
  CHECK(r.pass());
  CHECK(leg_collapse(m.ell) == SymElem::unit(all_slots));
  for (const auto& [l, rr] : m.ell.at_u) {
    CHECK(l.even_part().is_zero());
    CHECK(rr.even_part().is_zero());
  }
}

TEST_CASE("Method II reproduces the closed form") {
  MethodTwoResult m = method_two();
  CHECK(m.gammas[0] == SymElem::of({tu(one()), t1(phi1()), t1(phi1())}));
  CHECK(m.gammas[1] == SymElem::of({t1(phi1()), tu(one()), t1(phi2())}));
  CHECK(m.gammas[2] == SymElem::of({t1(phi2()), t1(phi2()), tu(one())}));
  const NCPoly a = one() - phi2() * phi2();
  CHECK(m.one_minus_gamma_sq[2] == SymElem::of({t1(a), t1(a), {}}));
  CHECK(m.ell.at_u == reference_method_two().at_u);
  CHECK(m.ell.at_u.back().first == m.ell.at_u.back().second);
  CHECK(verify_symbolic(m.ell).pass());
  CHECK(leg_collapse(m.ell) == SymElem::unit(all_slots));
  for (const auto& g : m.gammas) CHECK(in_pullback(g));
}

TEST_CASE("deleting the third term leaves the expected collapse residual") {
  SymConnection ell = reference_method_one();
  ell.at_u.pop_back();
  SymbolicReport r = verify_symbolic(ell);
  CHECK_FALSE(r.collapse);
  CHECK(r.right_colinear);
  CHECK(r.left_colinear);
  REQUIRE(r.failures.size() == 1);
  const SymElem& res = *r.failures.front().residual;
  const NCPoly expected = (one() - phi2() * phi2()) * (one() - phi1() * phi1());
  CHECK(res == SymElem::of({{}, t1(-expected), {}}));
}

TEST_CASE("colinearity failures are detected") {
  SymConnection ell = reference_method_one();
  ell.at_u.front().second = SymElem::unit(all_slots);
  SymbolicReport r = verify_symbolic(ell);
  CHECK_FALSE(r.right_colinear);
  CHECK(r.left_colinear);
}

TEST_CASE("leg independence") {
  CHECK(legs_independent(reference_method_one()));
  CHECK(legs_independent(reference_method_two()));
  SymConnection dup = reference_method_one();
  dup.at_u.push_back(dup.at_u.front());
  CHECK_FALSE(legs_independent(dup));
  CHECK_THROWS_AS(projector(dup), Error);
  SymConnection single = reference_method_one();
  single.at_u.resize(1);
  CHECK(legs_independent(single));
}

TEST_CASE("projector") {
  SymProjector p = projector(reference_method_one());
  CHECK(p.size == 3);
  CHECK(p.idempotent);
  CHECK(p.degree_zero);
  const NCPoly sq = phi2() * phi2();
  CHECK(p.entries[0][0] == SymElem::of({t1(sq), t1(sq), t1(one())}));
  SymProjector q = projector(method_two().ell);
  CHECK(q.idempotent);
  CHECK(q.degree_zero);
  // One-term connection on a single slot: the trivial rank-one idempotent.
  SymProjector r = projector(piece_connection(1));
  CHECK(r.size == 1);
  CHECK(r.entries[0][0] == SymElem::unit(0b010));
}

TEST_CASE("shift representation") {
  const std::size_t c = 8;
  const Mat e0sq = represent(E(0) * E(0), c);
  CHECK(e0sq.col_vec(0) == Vec::unit(c, 2));
  CHECK(e0sq.col_vec(1).is_zero());
  CHECK(represent(NCPoly::letter(Letter::s_star) * NCPoly::letter(Letter::s), c) == Mat::identity(c));
  CHECK(represent(NCPoly::letter(Letter::s) * NCPoly::letter(Letter::s_star), c).col_vec(0).is_zero());
  CHECK_THROWS_AS(represent(phi1(), c), Error);

  ShiftReport r = verify_En(16);
  CHECK(r.pass());
  CHECK(r.pairs_checked == 14 * 16);
  CHECK(r.edge_truncated);
  CHECK_THROWS_AS(verify_En(3), Error);
  CHECK(verify_En(4).pass());
}

TEST_CASE("phi hat") {
  CHECK(phi_hat(1, Scalar(1, 4)) == 1);
  CHECK(phi_hat(1, Scalar(1)) == -1);
  CHECK(phi_hat(2, Scalar(1, 2)) == 1);
  CHECK(phi_hat(1, Scalar(1, 2)) == 0);
  CHECK(phi_hat(2, Scalar(2)) == 0);
  CHECK_THROWS_AS(phi_hat(1, Scalar(0)), Error);
  CHECK_THROWS_AS(phi_hat(3, Scalar(1)), Error);
  // The branches agree at every breakpoint and wrap around.
  CHECK(phi_hat(1, Scalar(9, 4)) == phi_hat(1, Scalar(1, 4)));
  CHECK(phi_hat(2, Scalar(9, 4)) == phi_hat(2, Scalar(1, 4)));
}

TEST_CASE("json round trip") {
  const SymConnection ell = reference_method_one();
  const SymConnection back = connection_from_json(to_json(ell));
  CHECK(back.mask == ell.mask);
  CHECK(back.at_u == ell.at_u);
  CHECK(back.at_one == ell.at_one);
  nlohmann::json bad = to_json(ell);
  bad["at_u"][0]["left"][0]["1"]["terms"][0]["word"] = "phi7";
  CHECK_THROWS_AS(connection_from_json(bad), Error);
  CHECK(to_json(SymElem::unit(0b001)).size() == 1);
}
