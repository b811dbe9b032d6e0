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

#include "hopfglue/pullback.hpp"

#include "hopfglue/tensor.hpp"

namespace hopfglue {

namespace {

IndexPair key(std::size_t i, std::size_t j) { return {std::min(i, j), std::max(i, j)}; }

Vec first_missing(const Subspace& a, const Subspace& b) {
  for (const auto& v : a.basis())
    if (!b.contains(v)) return v;
  return Vec(a.ambient_dim());
}

}  // namespace

GluingFamily::GluingFamily(std::vector<AlgebraPtr> components, std::map<IndexPair, AlgebraPtr> targets,
                           std::map<IndexPair, AlgMorphism> maps)
    : components_(std::move(components)), targets_(std::move(targets)), maps_(std::move(maps)) {
  const std::size_t n = components_.size();
  for (const auto& [k, t] : targets_)
    if (k.first >= k.second || k.second >= n) fail(ErrorKind::invalid_structure, "target key must be (i, j) with i < j < n");
  for (const auto& [k, m] : maps_) {
    const auto [i, j] = k;
    if (i == j || i >= n || j >= n) fail(ErrorKind::invalid_structure, "gluing map index out of range");
    auto t = targets_.find(key(i, j));
    if (t == targets_.end()) fail(ErrorKind::invalid_structure, "gluing map without target algebra");
    if (m.domain() != components_[i] || m.codomain() != t->second)
      fail(ErrorKind::invalid_structure, "gluing map (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") does not connect its component to its target");
    if (!is_surjective(m))
      fail(ErrorKind::precondition, "gluing map (" + std::to_string(i) + "," + std::to_string(j) + ") is not surjective");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !maps_.contains({i, j}))
        fail(ErrorKind::invalid_structure, "missing gluing map (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

const AlgebraPtr& GluingFamily::target(std::size_t i, std::size_t j) const {
  auto it = targets_.find(key(i, j));
  if (i == j || it == targets_.end()) fail(ErrorKind::out_of_range, "no target for this pair");
  return it->second;
}

const AlgMorphism& GluingFamily::map(std::size_t i, std::size_t j) const {
  auto it = maps_.find({i, j});
  if (it == maps_.end()) fail(ErrorKind::out_of_range, "no gluing map for this pair");
  return it->second;
}

const ComodulePtr& GluingFamily::target_coaction(std::size_t i, std::size_t j) const {
  auto it = target_coactions_.find(key(i, j));
  if (it == target_coactions_.end()) fail(ErrorKind::out_of_range, "no target coaction for this pair");
  return it->second;
}

void GluingFamily::set_coactions(std::vector<ComodulePtr> components, std::map<IndexPair, ComodulePtr> targets) {
  if (components.size() != components_.size() || targets.size() != targets_.size())
    fail(ErrorKind::dimension_mismatch, "coactions must cover every component and target");
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i]->algebra_ptr() != components_[i] ||
        components[i]->hopf().dim() != components[0]->hopf().dim())
      fail(ErrorKind::invalid_structure, "component coaction " + std::to_string(i) + " is on the wrong algebra");
  for (const auto& [k, c] : targets) {
    auto t = targets_.find(k);
    if (t == targets_.end() || c->algebra_ptr() != t->second)
      fail(ErrorKind::invalid_structure, "target coaction is on the wrong algebra");
  }
  for (const auto& [k, m] : maps_) {
    if (!is_colinear(m.matrix(), *components[k.first], *targets.at(key(k.first, k.second))))
      fail(ErrorKind::precondition,
           "gluing map (" + std::to_string(k.first) + "," + std::to_string(k.second) + ") is not colinear");
  }
  component_coactions_ = std::move(components);
  target_coactions_ = std::move(targets);
}

void GluingFamily::replace_map(std::size_t i, std::size_t j, AlgMorphism m) {
  auto it = maps_.find({i, j});
  if (it == maps_.end()) fail(ErrorKind::out_of_range, "no gluing map for this pair");
  if (m.domain() != it->second.domain() || m.codomain() != it->second.codomain())
    fail(ErrorKind::invalid_structure, "replacement gluing map has a different shape");
  if (!is_surjective(m)) fail(ErrorKind::precondition, "replacement gluing map is not surjective");
  it->second = std::move(m);
  if (has_coactions() &&
      !is_colinear(it->second.matrix(), *component_coactions_[i], *target_coactions_.at(key(i, j))))
    fail(ErrorKind::precondition, "replacement gluing map is not colinear");
}

std::optional<Vec> MultiPullback::try_from_tuple(const std::vector<Vec>& parts) const {
  if (parts.size() != family.size()) fail(ErrorKind::dimension_mismatch, "tuple length");
  Vec flat;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].dim() != family.component(i)->dim()) fail(ErrorKind::dimension_mismatch, "tuple component");
    flat = concat(flat, parts[i]);
  }
  return total.space.coordinates(flat);
}

Vec MultiPullback::from_tuple(const std::vector<Vec>& parts) const {
  auto v = try_from_tuple(parts);
  if (!v) fail(ErrorKind::precondition, "tuple violates a gluing constraint");
  return *v;
}

std::vector<Vec> MultiPullback::to_tuple(const Vec& x) const {
  Vec flat = total.to_ambient(x);
  std::vector<Vec> out;
  for (const auto& pr : product.projections) out.push_back(pr.apply(flat));
  return out;
}

MultiPullback multipullback(const GluingFamily& f) {
  if (f.size() == 0) fail(ErrorKind::precondition, "empty gluing family");
  Product prod = direct_product(f.components());
  const std::size_t nprod = prod.algebra->dim();
  Mat constraints(0, nprod);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      constraints = constraints.vstack(f.map(i, j).matrix() * prod.projections[i].matrix() -
                                       f.map(j, i).matrix() * prod.projections[j].matrix());
  Subalgebra total = make_subalgebra(prod.algebra, kernel(constraints));

  std::vector<AlgMorphism> projections;
  for (std::size_t i = 0; i < f.size(); ++i)
    projections.emplace_back(total.algebra, f.component(i), prod.projections[i].matrix() * total.inclusion());

  ComodulePtr comodule;
  if (f.has_coactions()) {
    const HopfPtr& hopf = f.component_coaction(0)->hopf_ptr();
    const std::size_t nh = hopf->dim();
    Mat c(nprod * nh, nprod);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Mat& ci = f.component_coaction(i)->coaction();
      const std::size_t o = prod.offsets[i];
      for (std::size_t r = 0; r < ci.rows(); ++r)
        for (const auto& [col, v] : ci.row(r)) c.set((o + r / nh) * nh + r % nh, o + col, v);
    }
    auto prod_comodule = make_comodule(prod.algebra, hopf, std::move(c));
    comodule = restrict_comodule(*prod_comodule, total);
  }
  return {f, std::move(prod), std::move(total), std::move(projections), std::move(comodule)};
}

std::optional<Mat> cocycle_isomorphism(const GluingFamily& f, std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k || std::max({i, j, k}) >= f.size())
    fail(ErrorKind::out_of_range, "cocycle isomorphism needs three distinct indices");
  const Mat& pij = f.map(i, j).matrix();
  const Mat& pji = f.map(j, i).matrix();
  const Subspace kij = kernel(pij), kik = kernel(f.map(i, k).matrix());
  const Subspace kji = kernel(pji), kjk = kernel(f.map(j, k).matrix());
  const Subspace w = image(pij, kik);
  if (w != image(pji, kjk)) return std::nullopt;
  LinearQuotient qi = linear_quotient(sum(kij, kik));
  LinearQuotient qj = linear_quotient(sum(kji, kjk));
  LinearQuotient qw = linear_quotient(w);
  Mat mi = qw.projection * pij * qi.section;
  Mat mj = qw.projection * pji * qj.section;
  auto inv = inverse(mi);
  if (!inv || mj.rows() != mj.cols())
    fail(ErrorKind::invalid_structure, "triple-overlap quotients are not isomorphic");
  return *inv * mj;
}

CocycleReport check_cocycle(const GluingFamily& f) {
  CocycleReport rep;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Subspace a = image(f.map(i, j).matrix(), kernel(f.map(i, k).matrix()));
        const Subspace b = image(f.map(j, i).matrix(), kernel(f.map(j, k).matrix()));
        if (a == b) continue;
        rep.pass = false;
        Vec w = first_missing(a, b);
        if (w.is_zero()) w = first_missing(b, a);
        rep.failures.push_back({i, j, k, 1, std::move(w), "kernel images differ in the overlap algebra"});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        ++rep.triples_checked;
        auto lhs = cocycle_isomorphism(f, i, k, j);
        auto outer = cocycle_isomorphism(f, i, j, k);
        auto inner = cocycle_isomorphism(f, j, k, i);
        if (!lhs || !outer || !inner) continue;
        Mat rhs = *outer * *inner;
        if (*lhs == rhs) continue;
        rep.pass = false;
        std::size_t col = 0;
        while (col < rhs.cols() && lhs->col_vec(col) == rhs.col_vec(col)) ++col;
        rep.failures.push_back({i, j, k, 2, lhs->col_vec(col) - rhs.col_vec(col),
                                "composition differs on quotient basis vector " + std::to_string(col)});
      }
  return rep;
}

CoveringFamily::CoveringFamily(AlgebraPtr src, std::vector<AlgMorphism> ms)
    : source(std::move(src)), maps(std::move(ms)) {
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].domain() != source)
      fail(ErrorKind::invalid_structure, "covering map " + std::to_string(i) + " has the wrong domain");
    if (!is_surjective(maps[i]))
      fail(ErrorKind::precondition, "covering map " + std::to_string(i) + " is not surjective");
  }
}

CoveringFamily::CoveringFamily(ComodulePtr src, std::vector<AlgMorphism> ms, std::vector<ComodulePtr> piece_comodules)
    : CoveringFamily(src->algebra_ptr(), std::move(ms)) {
  source_comodule = std::move(src);
  if (!piece_comodules.empty()) {
    if (piece_comodules.size() != maps.size())
      fail(ErrorKind::dimension_mismatch, "one piece comodule per covering map");
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (piece_comodules[i]->algebra_ptr() != maps[i].codomain())
        fail(ErrorKind::invalid_structure, "piece comodule " + std::to_string(i) + " is on the wrong algebra");
  }
  pieces = std::move(piece_comodules);
}

SubspaceFamily CoveringFamily::kernel_family() const {
  std::vector<Subspace> ks;
  for (const auto& m : maps) ks.push_back(kernel(m.matrix()));
  return SubspaceFamily(source->dim(), std::move(ks));
}

CoveringReport check_covering(const CoveringFamily& c, std::size_t cap) {
  CoveringReport rep;
  SubspaceFamily fam = c.kernel_family();
  Subspace meet = Subspace::full(c.source->dim());
  for (const auto& k : fam.members) meet = intersect(meet, k);
  if (meet.dim() > 0) {
    rep.trivial_intersection = false;
    rep.intersection_witness = meet.basis().front();
  }
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (fam.members[i] == fam.members[j]) rep.duplicate_kernels.emplace_back(i, j);

  LatticeClosure closure = lattice_closure(fam, cap);
  rep.closure_size = closure.elements.size();
  if (!closure.complete) {
    rep.determined = false;
    return rep;
  }
  DistributivityResult d = check_distributive(closure);
  rep.distributive = d.distributive;
  if (d.counterexample) {
    const auto& [a, b, e] = *d.counterexample;
    rep.counterexample = std::array<Subspace, 3>{closure.elements[a], closure.elements[b], closure.elements[e]};
  }
  return rep;
}

ComodulePtr induced_coaction(const ComoduleAlgebra& p, const AlgMorphism& f) {
  if (f.domain() != p.algebra_ptr()) fail(ErrorKind::invalid_structure, "induced coaction: wrong domain");
  if (!is_subcomodule(p, kernel(f.matrix())))
    fail(ErrorKind::precondition, "kernel is not a subcomodule, no induced coaction");
  const std::size_t nc = f.codomain()->dim(), nh = p.hopf().dim();
  Mat c(nc * nh, nc);
  for (std::size_t k = 0; k < nc; ++k) {
    auto s = solve(f.matrix(), Vec::unit(nc, k));
    if (!s) fail(ErrorKind::precondition, "induced coaction needs a surjection");
    c.set_column(k, apply_left(f.matrix(), p.coact(*s), nh));
  }
  return make_comodule(f.codomain(), p.hopf_ptr(), std::move(c));
}

GluingFamily canonical_gluing(const CoveringFamily& c) {
  const std::size_t n = c.size();
  std::vector<AlgebraPtr> components;
  for (const auto& m : c.maps) components.push_back(m.codomain());
  std::vector<Subspace> kernels;
  for (const auto& m : c.maps) kernels.push_back(kernel(m.matrix()));

  std::map<IndexPair, AlgebraPtr> targets;
  std::map<IndexPair, AlgMorphism> maps;
  std::map<IndexPair, std::shared_ptr<const AlgMorphism>> quotient_maps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Quotient q = quotient(Ideal(c.source, sum(kernels[i], kernels[j])));
      targets.emplace(IndexPair{i, j}, q.algebra);
      quotient_maps.emplace(IndexPair{i, j}, q.projection);
      for (auto [a, b] : {IndexPair{i, j}, IndexPair{j, i}}) {
        const Mat& pa = c.maps[a].matrix();
        for (const auto& kv : kernels[a].basis())
          if (!(q.projection->matrix() * kv).is_zero())
            fail(ErrorKind::precondition, "gluing map is ill-defined; the family is not a covering");
        Mat m(q.algebra->dim(), pa.rows());
        for (std::size_t e = 0; e < pa.rows(); ++e)
          m.set_column(e, q.projection->matrix() * *solve(pa, Vec::unit(pa.rows(), e)));
        maps.emplace(IndexPair{a, b}, AlgMorphism(components[a], q.algebra, std::move(m)));
      }
    }
  GluingFamily fam(std::move(components), std::move(targets), std::move(maps));

  if (c.source_comodule) {
    std::vector<ComodulePtr> pieces = c.pieces;
    if (pieces.empty())
      for (const auto& m : c.maps) pieces.push_back(induced_coaction(*c.source_comodule, m));
    std::map<IndexPair, ComodulePtr> target_coactions;
    for (const auto& [k, q] : quotient_maps) target_coactions.emplace(k, induced_coaction(*c.source_comodule, *q));
    fam.set_coactions(std::move(pieces), std::move(target_coactions));
  }
  return fam;
}

IsomorphismReport check_pullback_isomorphism(const CoveringFamily& c, const MultiPullback& m) {
  IsomorphismReport rep;
  Mat stacked(0, c.source->dim());
  for (const auto& pi : c.maps) stacked = stacked.vstack(pi.matrix());
  if (stacked.rows() != m.product.algebra->dim()) return rep;
  rep.lands_in_pullback = true;
  for (std::size_t col = 0; col < stacked.cols(); ++col)
    if (!m.total.space.contains(stacked.col_vec(col))) rep.lands_in_pullback = false;
  if (!rep.lands_in_pullback) return rep;
  rep.matrix = m.total.space.coordinate_matrix() * stacked;
  rep.bijective = rep.matrix.rows() == rep.matrix.cols() && rank(rep.matrix) == rep.matrix.rows();
  try {
    AlgMorphism(c.source, m.total.algebra, rep.matrix);
    rep.multiplicative = true;
  } catch (const Error&) {
    rep.multiplicative = false;
  }
  return rep;
}

std::string to_string(Principality p) {
  switch (p) {
    case Principality::verified:
      return "verified";
    case Principality::failed:
      return "failed";
    case Principality::unverified:
      break;
  }
  return "unverified";
}

bool PiecewiseReport::pass() const {
  for (bool b : colinear)
    if (!b) return false;
  for (auto p : principality)
    if (p != Principality::verified) return false;
  return coinvariant_covering.pass();
}

PiecewiseReport check_piecewise_preconditions(const CoveringFamily& c,
                                              const std::vector<std::optional<StrongConnection>>& connections,
                                              std::size_t cap) {
  if (!c.source_comodule) fail(ErrorKind::precondition, "piecewise check needs a comodule algebra");
  const ComoduleAlgebra& p = *c.source_comodule;
  PiecewiseReport rep;
  std::vector<ComodulePtr> pieces = c.pieces;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (pieces.size() <= i) pieces.push_back(nullptr);
    if (!pieces[i]) {
      try {
        pieces[i] = induced_coaction(p, c.maps[i]);
      } catch (const Error&) {
        rep.colinear.push_back(false);
        continue;
      }
    }
    rep.colinear.push_back(is_colinear(c.maps[i].matrix(), p, *pieces[i]));
  }

  const Subspace b = coinvariants(p);
  Subalgebra base = make_subalgebra(c.source, b);
  std::vector<AlgMorphism> restricted;
  for (const auto& m : c.maps) {
    Subalgebra img = make_subalgebra(m.codomain(), image(m.matrix(), b));
    restricted.emplace_back(base.algebra, img.algebra, img.space.coordinate_matrix() * m.matrix() * b.basis_matrix());
  }
  rep.coinvariant_covering = check_covering(CoveringFamily(base.algebra, std::move(restricted)), cap);

  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i >= connections.size() || !connections[i]) {
      rep.principality.push_back(Principality::unverified);
      continue;
    }
    const StrongConnection& ell = *connections[i];
    bool ok = ell.target().dim() == c.maps[i].codomain()->dim() && verify_connection(ell).pass();
    rep.principality.push_back(ok ? Principality::verified : Principality::failed);
  }
  return rep;
}

}  // namespace hopfglue
