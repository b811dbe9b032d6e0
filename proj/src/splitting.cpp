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

#include "hopfglue/splitting.hpp"

#include <algorithm>

#include "hopfglue/tensor.hpp"

namespace hopfglue {

namespace {

SubspaceFamily kernel_family_except(const GluingFamily& f, std::size_t a, std::size_t b) {
  std::vector<Subspace> ks;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (k != a && k != b) ks.push_back(kernel(f.map(a, k).matrix()));
  return SubspaceFamily(f.component(a)->dim(), std::move(ks));
}

void require_distributive(const SubspaceFamily& fam, std::size_t cap, const std::string& what) {
  LatticeClosure closure = lattice_closure(fam, cap);
  if (!closure.complete) fail(ErrorKind::undetermined, what + ": lattice closure exceeded the cap");
  if (!check_distributive(closure).distributive) fail(ErrorKind::precondition, what + " is not distributive");
}

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

Splitting::Splitting(Mat p, SubspaceMap s) : pi(std::move(p)), section(std::move(s)) {
  if (section.domain().ambient_dim() != pi.rows() || section.codomain_dim() != pi.cols())
    fail(ErrorKind::dimension_mismatch, "section does not match the split map");
  for (const auto& v : section.domain().basis())
    if (pi * section.apply(v) != v) fail(ErrorKind::inconsistent, "section is not a right inverse");
}

Splitting subspace_respecting_splitting(const Mat& pi, const SubspaceFamily& family, std::size_t cap) {
  if (family.ambient_dim != pi.cols()) fail(ErrorKind::dimension_mismatch, "family lives outside the domain");
  if (rank(pi) != pi.rows()) fail(ErrorKind::precondition, "map to split is not surjective");
  std::vector<Subspace> with_kernel = family.members;
  with_kernel.push_back(kernel(pi));
  require_distributive(SubspaceFamily(pi.cols(), with_kernel), cap, "family together with ker pi");

  std::vector<Subspace> images;
  for (const auto& m : family.members) images.push_back(image(pi, m));
  SubspaceFamily bfam(pi.rows(), images);
  PartitionedBasis pb = partitioned_basis(bfam, cap);

  std::vector<Vec> vectors, values;
  for (IndexMask g : pb.order) {
    const auto& block = pb.block(g);
    if (block.empty()) continue;
    Subspace ag = family_intersection(family, g);
    Mat basis = ag.basis_matrix();
    Mat restricted = pi * basis;
    for (const auto& b : block) {
      auto x = solve(restricted, b);
      if (!x) fail(ErrorKind::inconsistent, "empty preimage intersection; image of intersection differs");
      vectors.push_back(b);
      values.push_back(basis * *x);
    }
  }
  Splitting s(pi, SubspaceMap::from_basis_images(Subspace::full(pi.rows()), vectors, values, pi.cols()));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const auto& b : images[i].basis())
      if (!family.members[i].contains(s.apply(b)))
        fail(ErrorKind::inconsistent, "splitting leaves family member " + std::to_string(i));
  s.respected_family = family;
  return s;
}

Splitting unitalize(const Splitting& s, const StructureAlgebra& a, const StructureAlgebra& b) {
  const Vec& one_a = a.unit();
  const Vec& one_b = b.unit();
  if (s.pi * one_a != one_b) fail(ErrorKind::precondition, "split map is not unital");
  const Subspace& d = s.section.domain();
  if (!d.contains(one_b)) fail(ErrorKind::precondition, "unit is outside the section's domain");
  if (s.apply(one_b) == one_a) {
    Splitting out = s;
    out.unital = true;
    return out;
  }
  std::vector<Vec> vectors{one_b}, values{one_a};
  const Subspace rest = complement_in(Subspace::span(b.dim(), vectors), d);
  for (const auto& v : rest.basis()) {
    vectors.push_back(v);
    values.push_back(s.apply(v));
  }
  Splitting out(s.pi, SubspaceMap::from_basis_images(d, vectors, values, a.dim()));
  out.unital = true;
  return out;
}

Splitting unitalize(const Splitting& s, const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
  const Vec& one_a = a.algebra().unit();
  const Vec& one_b = b.algebra().unit();
  if (s.pi * one_a != one_b) fail(ErrorKind::precondition, "split map is not unital");
  const Subspace& d = s.section.domain();
  if (!d.contains(one_b)) fail(ErrorKind::precondition, "unit is outside the section's domain");
  if (s.apply(one_b) == one_a) {
    Splitting out = s;
    out.unital = true;
    out.colinear = is_colinear(s.section, b, a);
    return out;
  }
  auto lambda = haar_functional(b.hopf());
  if (!lambda) fail(ErrorKind::precondition, "H has no Haar functional; cannot unitalize colinearly");

  const std::size_t nb = b.dim(), nh = b.hopf().dim();
  std::vector<Vec> frame{one_b};
  Subspace dco = intersect(d, coinvariants(b));
  const Subspace rest = complement_in(Subspace::span(nb, frame), dco);
  for (const auto& v : rest.basis()) frame.push_back(v);
  Mat frame_m = Mat::from_columns(nb, frame);
  const Vec k = one_a - s.apply(one_b);

  std::vector<Vec> values;
  for (const auto& v : d.basis()) {
    Vec rho = b.coact(v);
    Vec e(nb);
    for (std::size_t h = 0; h < nh; ++h)
      if (!is_zero((*lambda)[h])) e.axpy((*lambda)[h], slice_left(rho, nb, nh, h));
    auto coords = solve(frame_m, e);
    if (!coords) fail(ErrorKind::inconsistent, "averaged element left the coinvariant part of the domain");
    Vec val = s.apply(v);
    val.axpy((*coords)[0], k);
    values.push_back(std::move(val));
  }
  Splitting out(s.pi, SubspaceMap::from_basis_images(d, d.basis(), values, a.dim()));
  out.unital = true;
  out.colinear = is_colinear(out.section, b, a);
  return out;
}

Splitting coinvariant_splitting(const Mat& pi, const ComoduleAlgebra& a, const ComoduleAlgebra& b,
                                const std::optional<SubspaceFamily>& family, std::size_t cap) {
  const Subspace aco = coinvariants(a), bco = coinvariants(b);
  const Mat abasis = aco.basis_matrix();
  Mat pic = bco.coordinate_matrix() * pi * abasis;
  if (image(pi, aco) != bco) fail(ErrorKind::precondition, "restriction to coinvariants is not surjective");

  std::vector<Subspace> members, members_coords;
  if (family) {
    for (const auto& m : family->members) {
      Subspace meet = intersect(m, aco);
      std::vector<Vec> coords;
      for (const auto& v : meet.basis()) coords.push_back(*aco.coordinates(v));
      members.push_back(meet);
      members_coords.push_back(Subspace::span(aco.dim(), coords));
    }
  }
  Splitting sc = subspace_respecting_splitting(pic, SubspaceFamily(aco.dim(), members_coords), cap);
  std::vector<Vec> images;
  for (std::size_t j = 0; j < bco.dim(); ++j) images.push_back(abasis * sc.apply(Vec::unit(bco.dim(), j)));
  Splitting out(pi, SubspaceMap(bco, a.dim(), Mat::from_columns(a.dim(), images)));
  out.colinear = true;
  if (family) out.respected_family = SubspaceFamily(a.dim(), members);
  return out;
}

Splitting colinearize(const Splitting& alpha_coinv, const StrongConnection& ell, const Mat& pi,
                      const ComoduleAlgebra& a, const ComoduleAlgebra& b, const std::optional<SubspaceFamily>& family) {
  if (ell.target().dim() != a.dim()) fail(ErrorKind::dimension_mismatch, "connection is not on the domain");
  if (!verify_connection(ell).pass()) fail(ErrorKind::precondition, "connection fails the axioms");
  if (alpha_coinv.section.domain() != coinvariants(b))
    fail(ErrorKind::precondition, "coinvariant splitting must be defined on the coinvariants");
  if (family)
    for (const auto& m : family->members)
      if (!is_ideal(a.algebra(), m) || !is_subcomodule(a, m))
        fail(ErrorKind::precondition, "family members must be ideals and subcomodules");

  const std::size_t na = a.dim(), nb = b.dim(), nh = b.hopf().dim();
  const StructureAlgebra& alg_a = a.algebra();
  const StructureAlgebra& alg_b = b.algebra();
  Mat m(na, nb);
  for (std::size_t c = 0; c < nb; ++c) {
    Vec rho = b.coact(Vec::unit(nb, c));
    Vec t(nb * na);
    for (std::size_t h = 0; h < nh; ++h) {
      Vec part = slice_left(rho, nb, nh, h);
      if (part.is_zero()) continue;
      for (const auto& [l, r] : ell.terms(h)) t += tensor(alg_b.multiply(part, pi * l), r);
    }
    Vec col(na);
    for (std::size_t j = 0; j < na; ++j) {
      Vec s = slice_left(t, nb, na, j);
      if (!s.is_zero()) col += alg_a.multiply(alpha_coinv.apply(s), Vec::unit(na, j));
    }
    m.set_column(c, col);
  }
  Splitting out(pi, SubspaceMap::from_matrix(m));
  out.colinear = is_colinear(m, b, a);
  if (!out.colinear) fail(ErrorKind::inconsistent, "colinearized splitting is not colinear");
  out.unital = out.apply(alg_b.unit()) == alg_a.unit();
  if (family) {
    for (std::size_t i = 0; i < family->size(); ++i) {
      const Subspace img = image(pi, family->members[i]);
      for (const auto& v : img.basis())
        if (!family->members[i].contains(out.apply(v)))
          fail(ErrorKind::inconsistent, "colinearized splitting leaves family member " + std::to_string(i));
    }
    out.respected_family = family;
  }
  return out;
}

GluingSplittings gluing_splittings(const GluingFamily& f, const std::vector<std::optional<StrongConnection>>& connections,
                                   std::size_t cap) {
  bool colinear = f.has_coactions() && connections.size() == f.size();
  for (const auto& c : connections) colinear = colinear && c.has_value();
  GluingSplittings out;
  for (const auto& [k, morph] : f.maps()) {
    const auto [a, b] = k;
    const Mat& pi = morph.matrix();
    SubspaceFamily fam = kernel_family_except(f, a, b);
    if (colinear) {
      const ComoduleAlgebra& ca = *f.component_coaction(a);
      const ComoduleAlgebra& cb = *f.target_coaction(a, b);
      const StrongConnection& ell = *connections[a];
      out.alphas.emplace(k, colinearize(coinvariant_splitting(pi, ca, cb, fam, cap), ell, pi, ca, cb, fam));
      Splitting base = unitalize(coinvariant_splitting(pi, ca, cb, std::nullopt, cap), ca.algebra(), cb.algebra());
      Splitting beta = colinearize(base, ell, pi, ca, cb);
      if (!beta.unital) fail(ErrorKind::inconsistent, "colinearized unital splitting lost unitality");
      out.betas.emplace(k, std::move(beta));
    } else {
      out.alphas.emplace(k, subspace_respecting_splitting(pi, fam, cap));
      Splitting plain = subspace_respecting_splitting(pi, SubspaceFamily(pi.cols(), {}), cap);
      out.betas.emplace(k, unitalize(plain, *morph.domain(), *morph.codomain()));
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> find_kernel_condition_violation(const GluingFamily& f,
                                                                          const SplittingTable& alphas) {
  for (const auto& [key, alpha] : alphas) {
    const auto [i, j] = key;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (k == i || k == j) continue;
      Subspace ker = kernel(f.map(i, k).matrix());
      const Subspace img = image(f.map(i, j).matrix(), ker);
      for (const auto& v : img.basis())
        if (!ker.contains(alpha.apply(v))) return std::array<std::size_t, 3>{i, j, k};
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> default_order(std::size_t n, std::size_t i) {
  if (i >= n) fail(ErrorKind::out_of_range, "piece index out of range");
  std::vector<std::size_t> kappa{i};
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) kappa.push_back(j);
  return kappa;
}

Splitting global_splitting(const MultiPullback& m, const SplittingTable& alphas, const SplittingTable& betas,
                           std::size_t i, const std::vector<std::size_t>& kappa, const GlobalSplittingOptions& opts) {
  const GluingFamily& f = m.family;
  const std::size_t n = f.size();
  if (i >= n) fail(ErrorKind::out_of_range, "piece index out of range");
  {
    std::vector<std::size_t> sorted = kappa;
    std::sort(sorted.begin(), sorted.end());
    bool perm = sorted.size() == n;
    for (std::size_t j = 0; perm && j < n; ++j) perm = sorted[j] == j;
    if (!perm || kappa.front() != i) fail(ErrorKind::precondition, "order must be a permutation starting at the piece");
  }
  if (!check_cocycle(f).pass) fail(ErrorKind::precondition, "gluing family fails the cocycle condition");
  for (std::size_t a = 0; a < n && n > 1; ++a) {
    std::vector<Subspace> ks;
    for (std::size_t b = 0; b < n; ++b)
      if (b != a) ks.push_back(kernel(f.map(a, b).matrix()));
    require_distributive(SubspaceFamily(f.component(a)->dim(), ks), opts.cap,
                         "kernel family of component " + std::to_string(a));
  }
  bool colinear = f.has_coactions();
  for (const auto& [k, morph] : f.maps()) {
    auto al = alphas.find(k);
    auto be = betas.find(k);
    if (al == alphas.end() || be == betas.end())
      fail(ErrorKind::precondition, "missing splitting for gluing map (" + std::to_string(k.first) + "," +
                                        std::to_string(k.second) + ")");
    if (al->second.pi != morph.matrix() || be->second.pi != morph.matrix())
      fail(ErrorKind::precondition, "splitting does not split its gluing map");
    if (al->second.section.domain().dim() != morph.codomain()->dim() ||
        be->second.section.domain().dim() != morph.codomain()->dim())
      fail(ErrorKind::precondition, "splittings must be defined on the whole overlap");
    if (be->second.apply(morph.codomain()->unit()) != morph.domain()->unit())
      fail(ErrorKind::precondition, "beta splitting is not unital");
    colinear = colinear && al->second.colinear && be->second.colinear;
  }
  if (auto v = find_kernel_condition_violation(f, alphas))
    fail(ErrorKind::precondition, "kernel condition violated by alpha at " + triple_name((*v)[0], (*v)[1], (*v)[2]));

  auto pi_of = [&](std::size_t a, std::size_t b) -> const Mat& { return f.map(a, b).matrix(); };
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::inconsistent, "checkpoint failed: " + what);
  };

  const std::size_t dim_i = f.component(i)->dim();
  std::vector<Vec> vectors, values;
  for (std::size_t e = 0; e < dim_i; ++e) {
    std::vector<Vec> parts(n);
    parts[i] = Vec::unit(dim_i, e);
    for (std::size_t mm = 0; mm + 1 < n; ++mm) {
      const std::size_t t = kappa[mm + 1];
      Vec x = betas.at({t, kappa[0]}).apply(pi_of(kappa[0], t) * parts[kappa[0]]);
      if (opts.debug_checkpoints)
        check(pi_of(kappa[0], t) * parts[kappa[0]] == pi_of(t, kappa[0]) * x, "initial step");
      for (std::size_t k = 0; k < mm; ++k) {
        const std::size_t s = kappa[k + 1];
        x -= alphas.at({t, s}).apply(pi_of(t, s) * x - pi_of(s, t) * parts[s]);
        if (opts.debug_checkpoints)
          for (std::size_t j = 0; j <= k + 1; ++j)
            check(pi_of(kappa[j], t) * parts[kappa[j]] == pi_of(t, kappa[j]) * x,
                  "partial agreement at step " + std::to_string(k + 1));
      }
      parts[t] = std::move(x);
      if (opts.debug_checkpoints)
        for (std::size_t j = 0; j <= mm + 1; ++j)
          for (std::size_t l = 0; l <= mm + 1; ++l)
            if (j != l)
              check(pi_of(kappa[j], kappa[l]) * parts[kappa[j]] == pi_of(kappa[l], kappa[j]) * parts[kappa[l]],
                    "pairwise agreement after " + std::to_string(mm + 1) + " components");
    }
    auto coords = m.try_from_tuple(parts);
    if (!coords) fail(ErrorKind::inconsistent, "recursively built tuple leaves the multi-pullback");
    vectors.push_back(Vec::unit(dim_i, e));
    values.push_back(std::move(*coords));
  }
  Splitting out(m.projections[i].matrix(),
                SubspaceMap::from_basis_images(Subspace::full(dim_i), vectors, values, m.dim()));
  out.unital = out.apply(f.component(i)->unit()) == m.algebra()->unit();
  if (!out.unital) fail(ErrorKind::inconsistent, "global splitting is not unital");
  if (colinear) {
    out.colinear = is_colinear(out.section, *f.component_coaction(i), *m.comodule);
    if (!out.colinear) fail(ErrorKind::inconsistent, "global splitting built from colinear data is not colinear");
  }
  return out;
}

SubspaceMap restrict_map(const SubspaceMap& f, const Subspace& v) {
  if (!f.domain().contains(v)) fail(ErrorKind::precondition, "restriction outside the domain");
  std::vector<Vec> images;
  for (const auto& b : v.basis()) images.push_back(f.apply(b));
  return SubspaceMap(v, f.codomain_dim(), Mat::from_columns(f.codomain_dim(), images));
}

CoveringPipeline build_covering_pipeline(const CoveringFamily& c, const std::vector<StrongConnection>& connections,
                                         std::size_t cap) {
  if (!c.source_comodule || c.pieces.size() != c.size())
    fail(ErrorKind::precondition, "pipeline needs a comodule covering with piece comodules");
  if (connections.size() != c.size()) fail(ErrorKind::dimension_mismatch, "one connection per piece");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (connections[i].target().dim() != c.pieces[i]->dim())
      fail(ErrorKind::dimension_mismatch, "connection " + std::to_string(i) + " is not on its piece");

  GluingFamily gluing = canonical_gluing(c);
  MultiPullback pullback = multipullback(gluing);
  IsomorphismReport iso = check_pullback_isomorphism(c, pullback);
  if (!iso.pass()) fail(ErrorKind::precondition, "P is not isomorphic to the multi-pullback of its covering");
  Mat back = *inverse(iso.matrix);

  std::vector<std::optional<StrongConnection>> opt(connections.begin(), connections.end());
  GluingSplittings splittings = gluing_splittings(gluing, opt, cap);

  std::vector<Splitting> global;
  std::vector<PieceData> pieces;
  std::vector<Mat> projections;
  for (std::size_t i = 0; i < c.size(); ++i) {
    global.push_back(global_splitting(pullback, splittings.alphas, splittings.betas, i, default_order(c.size(), i),
                                      {false, cap}));
    SubspaceMap to_p = SubspaceMap::from_matrix(back * global.back().section.extended_matrix());
    Subspace v = default_leg_space(connections[i]);
    pieces.push_back({c.pieces[i], connections[i], v, restrict_map(to_p, v)});
    projections.push_back(c.maps[i].matrix());
  }
  return {std::move(gluing), std::move(pullback), std::move(iso.matrix), std::move(splittings),
          std::move(global), std::move(pieces), std::move(projections)};
}

}  // namespace hopfglue
