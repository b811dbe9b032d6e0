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

#include "hopfglue/instances.hpp"

#include <algorithm>

#include "hopfglue/tensor.hpp"

namespace hopfglue {

namespace {

Mat z2_change() { return Mat::dense({{1, 1}, {1, -1}}); }

std::size_t point(std::size_t orbit, std::size_t sign) { return 2 * orbit + sign; }

}  // namespace

HopfPtr z2_hopf() {
  static const HopfPtr h = rebase(*function_hopf(cyclic_group(2)), z2_change());
  return h;
}

std::vector<Vec> z2_grouplikes() { return {Vec{1, 0}, Vec{0, 1}}; }

Vec section_indicator(std::size_t orbits, const std::vector<std::size_t>& subset) {
  Vec t(2 * orbits);
  for (std::size_t o : subset) {
    t[point(o, 0)] = 1;
    t[point(o, 1)] = -1;
  }
  return t;
}

OrbitInstance orbit_instance(std::size_t orbits, std::vector<std::vector<std::size_t>> piece_orbits) {
  OrbitInstance inst;
  inst.orbits = orbits;
  inst.hopf = z2_hopf();
  const std::size_t n = 2 * orbits;
  auto alg = function_algebra(n);
  // Delta_P(delta_y) = sum_h delta_{y h} (x) delta_h in the point basis of C(Z2).
  Mat coaction(n * 2, n);
  for (std::size_t o = 0; o < orbits; ++o)
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t h = 0; h < 2; ++h) coaction.set(point(o, s ^ h) * 2 + h, point(o, s), Scalar(1));
  auto pointwise = make_comodule(alg, function_hopf(cyclic_group(2)), std::move(coaction));
  inst.total = with_rebased_hopf(*pointwise, inst.hopf, z2_change());

  std::vector<AlgMorphism> maps;
  std::vector<ComodulePtr> pieces;
  for (auto& orb : piece_orbits) {
    std::sort(orb.begin(), orb.end());
    const std::size_t m = 2 * orb.size();
    Mat r(m, n);
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (std::size_t s = 0; s < 2; ++s) r.set(2 * k + s, point(orb[k], s), Scalar(1));
    maps.emplace_back(alg, function_algebra(m), std::move(r));
    pieces.push_back(induced_coaction(*inst.total, maps.back()));
    Vec tau = section_indicator(orb.size(), [&] {
      std::vector<std::size_t> all(orb.size());
      for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
      return all;
    }());
    const Vec one = pieces.back()->algebra().unit();
    inst.connections.emplace_back(pieces.back(),
                                  std::vector<StrongConnection::Terms>{{{one, one}}, {{tau, tau}}});
    inst.taus.push_back(std::move(tau));
  }
  inst.piece_orbits = std::move(piece_orbits);
  inst.covering = CoveringFamily(inst.total, std::move(maps), std::move(pieces));
  return inst;
}

OrbitInstance e1_instance() { return orbit_instance(3, {{1, 2}, {0, 2}, {0, 1}}); }

OrbitInstance e3_instance() { return orbit_instance(4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}}); }

OrbitInstance sub_instance(const OrbitInstance& inst, const std::vector<std::size_t>& pieces) {
  std::vector<std::vector<std::size_t>> orbs;
  for (std::size_t i : pieces) orbs.push_back(inst.piece_orbits.at(i));
  return orbit_instance(inst.orbits, std::move(orbs));
}

GluingFamily swap_perturbed(const GluingFamily& f, const OrbitInstance& inst, std::size_t i, std::size_t j,
                            std::size_t orbit) {
  const AlgMorphism& pij = f.map(i, j);
  const Mat& pi_i = inst.covering.maps.at(i).matrix();
  const std::size_t d = pij.codomain()->dim();
  std::size_t idx[2];
  for (std::size_t s = 0; s < 2; ++s) {
    Vec img = pij.apply(pi_i * Vec::unit(2 * inst.orbits, point(orbit, s)));
    idx[s] = img.leading_index();
    if (idx[s] >= d || img != Vec::unit(d, idx[s]))
      fail(ErrorKind::precondition, "orbit point does not map to a point of the overlap");
  }
  Mat swap = Mat::identity(d);
  swap.set(idx[0], idx[0], Scalar(0));
  swap.set(idx[1], idx[1], Scalar(0));
  swap.set(idx[0], idx[1], Scalar(1));
  swap.set(idx[1], idx[0], Scalar(1));
  GluingFamily out = f;
  out.replace_map(i, j, AlgMorphism(pij.domain(), pij.codomain(), swap * pij.matrix()));
  return out;
}

CoveringFamily duplicated_kernel_covering(const OrbitInstance& e1) {
  const auto& m = e1.covering.maps.at(0);
  return CoveringFamily(e1.total, {m, m, m}, {e1.covering.pieces.at(0), e1.covering.pieces.at(0), e1.covering.pieces.at(0)});
}

RegularInstance regular_instance(HopfPtr h) {
  RegularInstance inst;
  inst.hopf = h;
  inst.total = regular_comodule(h);
  const std::size_t n = h->dim();
  std::vector<StrongConnection::Terms> terms(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Scalar c = h->coproduct_coeff(b, x, y);
        if (!is_zero(c)) terms[b].emplace_back(c * h->antipode().col_vec(x), Vec::unit(n, y));
      }
  auto id = identity_morphism(inst.total->algebra_ptr());
  inst.covering = CoveringFamily(inst.total, {id}, {inst.total});
  inst.connections.emplace_back(inst.total, std::move(terms));
  return inst;
}

}  // namespace hopfglue
