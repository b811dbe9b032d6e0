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

#include "hopfglue/connection.hpp"

#include <tuple>

#include "hopfglue/pullback.hpp"
#include "hopfglue/tensor.hpp"

namespace hopfglue {

namespace {

Mat column_of(const Vec& g) {
  Mat m(g.dim(), 1);
  for (std::size_t i = 0; i < g.dim(); ++i) m.set(i, 0, g[i]);
  return m;
}

bool is_coinvariant(const ComoduleAlgebra& p, const Vec& x) {
  return p.coact(x) == tensor(x, p.hopf().unit());
}

// (i, j) pairs with nonzero coefficient in Delta(e_b).
std::vector<std::tuple<std::size_t, std::size_t, Scalar>> coproduct_terms(const HopfAlgebra& h, std::size_t b) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  const std::size_t n = h.dim();
  Vec d = h.comult().col_vec(b);
  for (std::size_t k = 0; k < d.dim(); ++k)
    if (!hopfglue::is_zero(d[k])) out.emplace_back(k / n, k % n, d[k]);
  return out;
}

}  // namespace

StrongConnection::StrongConnection(ComodulePtr target, std::vector<Terms> per_basis)
    : target_(std::move(target)), terms_(std::move(per_basis)) {
  if (!target_) fail(ErrorKind::invalid_structure, "strong connection without target");
  if (terms_.size() != target_->hopf().dim())
    fail(ErrorKind::dimension_mismatch, "strong connection needs one term list per H basis vector");
  for (const auto& list : terms_)
    for (const auto& [l, r] : list)
      if (l.dim() != target_->dim() || r.dim() != target_->dim())
        fail(ErrorKind::dimension_mismatch, "strong connection leg has wrong dimension");
}

Vec StrongConnection::tensor_of(std::size_t b) const {
  const std::size_t n = target_->dim();
  return tensor_sum(terms_.at(b), n, n);
}

Vec StrongConnection::evaluate(const Vec& h) const {
  if (h.dim() != terms_.size()) fail(ErrorKind::dimension_mismatch, "strong connection argument");
  const std::size_t n = target_->dim();
  Vec out(n * n);
  for (std::size_t b = 0; b < h.dim(); ++b)
    if (!hopfglue::is_zero(h[b])) out.axpy(h[b], tensor_of(b));
  return out;
}

ConnectionReport verify_connection(const StrongConnection& ell) {
  ConnectionReport rep;
  const ComoduleAlgebra& p = ell.target();
  const HopfAlgebra& h = ell.hopf();
  const StructureAlgebra& a = p.algebra();
  const std::size_t np = p.dim(), nh = h.dim();
  const Vec& one = a.unit();

  auto record = [&](bool& flag, const char* axiom, std::size_t b, Vec residual) {
    if (residual.is_zero()) return;
    flag = false;
    rep.failures.push_back({axiom, b, std::move(residual)});
  };

  record(rep.unital, "unitality", h.unit().leading_index(), ell.evaluate(h.unit()) - tensor(one, one));

  for (std::size_t b = 0; b < nh; ++b) {
    Vec collapse = h.counit()[b] * one;
    for (const auto& [l, r] : ell.terms(b)) collapse -= a.multiply(l, r);
    record(rep.collapse, "collapse", b, std::move(collapse));

    const Vec lb = ell.tensor_of(b);
    Vec right = -apply_right(p.coaction(), lb, np);
    Vec left(nh * np * np);
    for (const auto& [x, y, c] : coproduct_terms(h, b)) {
      right.axpy(c, tensor(ell.tensor_of(x), Vec::unit(nh, y)));
      left.axpy(c, tensor(h.antipode().col_vec(x), ell.tensor_of(y)));
    }
    record(rep.right_colinear, "right-colinearity", b, std::move(right));

    // (flip rho (x) id) l(e_b): e_h (x) p (x) r for every coaction entry of each left leg.
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = 0; j < np; ++j) {
        const Scalar& t = lb[i * np + j];
        if (hopfglue::is_zero(t)) continue;
        Vec rho = p.coaction().col_vec(i);
        for (std::size_t k = 0; k < rho.dim(); ++k) {
          if (hopfglue::is_zero(rho[k])) continue;
          const std::size_t q = k / nh, g = k % nh;
          left[(g * np + q) * np + j] -= t * rho[k];
        }
      }
    record(rep.left_colinear, "left-colinearity", b, std::move(left));
  }
  return rep;
}

Subspace default_leg_space(const StrongConnection& ell) {
  const ComoduleAlgebra& p = ell.target();
  std::vector<Vec> seed{p.algebra().unit()};
  for (const auto& list : ell.all_terms())
    for (const auto& [l, r] : list) {
      seed.push_back(l);
      seed.push_back(r);
    }
  return comodule_closure(p, Subspace::span(p.dim(), seed));
}

Synthesis::Synthesis(std::vector<PieceData> pieces, ComodulePtr total, std::vector<Mat> projections)
    : pieces_(std::move(pieces)), total_(std::move(total)), projections_(std::move(projections)) {
  if (!total_) fail(ErrorKind::invalid_structure, "synthesis needs a total comodule algebra");
  const HopfAlgebra& h = total_->hopf();
  if (!is_cocommutative(h)) fail(ErrorKind::not_cocommutative, "piecewise synthesis requires co-commutative H");
  if (pieces_.empty() || pieces_.size() != projections_.size())
    fail(ErrorKind::dimension_mismatch, "need one projection per piece");

  const std::size_t np = total_->dim();
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const PieceData& pd = pieces_[i];
    const ComoduleAlgebra& piece = *pd.piece;
    const Mat& pi = projections_[i];
    if (pi.rows() != piece.dim() || pi.cols() != np)
      fail(ErrorKind::dimension_mismatch, "projection " + std::to_string(i) + " has wrong shape");
    if (piece.hopf().dim() != h.dim() || pd.ell.target().dim() != piece.dim())
      fail(ErrorKind::dimension_mismatch, "piece " + std::to_string(i) + " does not match its connection");
    if (!is_colinear(pi, *total_, piece))
      fail(ErrorKind::precondition, "projection " + std::to_string(i) + " is not colinear");
    if (!verify_connection(pd.ell).pass())
      fail(ErrorKind::precondition, "connection on piece " + std::to_string(i) + " fails the axioms");
    if (!is_subcomodule(piece, pd.V) || !pd.V.contains(piece.algebra().unit()))
      fail(ErrorKind::precondition, "V_" + std::to_string(i) + " must be a subcomodule containing 1");
    for (const auto& list : pd.ell.all_terms())
      for (const auto& [l, r] : list)
        if (!pd.V.contains(l) || !pd.V.contains(r))
          fail(ErrorKind::precondition, "legs of the connection on piece " + std::to_string(i) + " leave V");
    if (pd.alpha.domain() != pd.V || pd.alpha.codomain_dim() != np)
      fail(ErrorKind::dimension_mismatch, "alpha_" + std::to_string(i) + " must map V into P");
    for (const auto& v : pd.V.basis())
      if (pi * pd.alpha.apply(v) != v)
        fail(ErrorKind::precondition, "alpha_" + std::to_string(i) + " does not split its projection");
    if (pd.alpha.apply(piece.algebra().unit()) != total_->algebra().unit())
      fail(ErrorKind::precondition, "alpha_" + std::to_string(i) + " is not unital");
    if (!is_colinear(pd.alpha, piece, *total_))
      fail(ErrorKind::precondition, "alpha_" + std::to_string(i) + " is not colinear");
  }

  const std::size_t n = pieces_.size(), nh = h.dim();
  const StructureAlgebra& a = total_->algebra();
  theta_cache_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < nh; ++x) {
      Vec t = h.counit()[x] * a.unit();
      for (const auto& [l, r] : pieces_[i].ell.terms(x))
        t -= a.multiply(pieces_[i].alpha.apply(l), pieces_[i].alpha.apply(r));
      theta_cache_[i].push_back(std::move(t));
    }

  T_cache_.assign(n + 1, {});
  for (std::size_t b = 0; b < nh; ++b) T_cache_[n].push_back(h.counit()[b] * a.unit());
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t b = 0; b < nh; ++b) {
      Vec t(np);
      for (const auto& [x, y, c] : coproduct_terms(h, b))
        t.axpy(c, a.multiply(theta_cache_[i][x], T_cache_[i + 1][y]));
      T_cache_[i].push_back(std::move(t));
    }
}

Vec Synthesis::theta_basis(std::size_t i, std::size_t x) const { return theta_cache_.at(i).at(x); }

const Vec& Synthesis::T_basis(std::size_t i, std::size_t b) const { return T_cache_.at(i).at(b); }

Vec Synthesis::theta(std::size_t i, const Vec& h) const {
  if (i >= pieces_.size()) fail(ErrorKind::out_of_range, "theta index out of range");
  if (h.dim() != total_->hopf().dim()) fail(ErrorKind::dimension_mismatch, "theta argument");
  Vec out(total_->dim());
  for (std::size_t x = 0; x < h.dim(); ++x)
    if (!hopfglue::is_zero(h[x])) out.axpy(h[x], theta_cache_[i][x]);
  return out;
}

Vec Synthesis::T(std::size_t i, const Vec& h) const {
  if (i > pieces_.size()) fail(ErrorKind::out_of_range, "T index out of range");
  if (h.dim() != total_->hopf().dim()) fail(ErrorKind::dimension_mismatch, "T argument");
  Vec out(total_->dim());
  for (std::size_t b = 0; b < h.dim(); ++b)
    if (!hopfglue::is_zero(h[b])) out.axpy(h[b], T_cache_[i][b]);
  return out;
}

Vec Synthesis::leg_product(std::size_t i, const Vec& h) const {
  if (i >= pieces_.size()) fail(ErrorKind::out_of_range, "piece index out of range");
  const StructureAlgebra& a = total_->algebra();
  Vec out(total_->dim());
  for (std::size_t x = 0; x < h.dim(); ++x) {
    if (hopfglue::is_zero(h[x])) continue;
    for (const auto& [l, r] : pieces_[i].ell.terms(x))
      out.axpy(h[x], a.multiply(pieces_[i].alpha.apply(l), pieces_[i].alpha.apply(r)));
  }
  return out;
}

StrongConnection Synthesis::connection() const {
  const HopfAlgebra& h = total_->hopf();
  const StructureAlgebra& a = total_->algebra();
  std::vector<StrongConnection::Terms> out(h.dim());
  for (std::size_t b = 0; b < h.dim(); ++b)
    for (std::size_t i = 0; i < pieces_.size(); ++i)
      for (const auto& [x, y, c] : coproduct_terms(h, b)) {
        const Vec& tail = T_basis(i + 1, y);
        if (tail.is_zero()) continue;
        for (const auto& [l, r] : pieces_[i].ell.terms(x)) {
          Vec left = c * pieces_[i].alpha.apply(l);
          Vec right = a.multiply(pieces_[i].alpha.apply(r), tail);
          if (left.is_zero() || right.is_zero()) continue;
          out[b].emplace_back(std::move(left), std::move(right));
        }
      }
  return StrongConnection(total_, std::move(out));
}

Synthesis::ProofReport Synthesis::check_proof_identities() const {
  ProofReport rep;
  const HopfAlgebra& h = total_->hopf();
  const StructureAlgebra& a = total_->algebra();
  const std::size_t n = pieces_.size(), nh = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!theta(i, h.unit()).is_zero()) {
      rep.theta_of_unit_zero = false;
      rep.failures.push_back("theta_" + std::to_string(i) + "(1) != 0");
    }
  for (std::size_t b = 0; b < nh; ++b) {
    if (!T_basis(0, b).is_zero()) {
      rep.T0_zero = false;
      rep.failures.push_back("T_0(e_" + std::to_string(b) + ") != 0");
    }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = j; i < n; ++i)
        if (!(projections_[i] * T_basis(j, b)).is_zero()) {
          rep.projections_vanish = false;
          rep.failures.push_back("pi_" + std::to_string(i) + "(T_" + std::to_string(j) + "(e_" +
                                 std::to_string(b) + ")) != 0");
        }
    for (std::size_t i = 0; i < n; ++i) {
      Vec expect = T_basis(i + 1, b);
      for (const auto& [x, y, c] : coproduct_terms(h, b))
        expect.axpy(-c, a.multiply(leg_product(i, Vec::unit(nh, x)), T_basis(i + 1, y)));
      if (expect != T_basis(i, b)) {
        rep.recursion = false;
        rep.failures.push_back("recursion fails at T_" + std::to_string(i) + "(e_" + std::to_string(b) + ")");
      }
      if (!is_coinvariant(*total_, leg_product(i, Vec::unit(nh, b)))) {
        rep.leg_products_coinvariant = false;
        rep.failures.push_back("leg product " + std::to_string(i) + " at e_" + std::to_string(b) +
                               " is not coinvariant");
      }
    }
  }
  return rep;
}

StrongConnection synthesize_piecewise(std::vector<PieceData> pieces, ComodulePtr total, std::vector<Mat> projections) {
  Synthesis s(std::move(pieces), std::move(total), std::move(projections));
  auto proof = s.check_proof_identities();
  if (!proof.T0_zero) fail(ErrorKind::inconsistent, "T_0 does not vanish; covering data are inconsistent");
  if (!proof.pass()) fail(ErrorKind::inconsistent, "proof identity fails: " + proof.failures.front());
  StrongConnection ell = s.connection();
  auto rep = verify_connection(ell);
  if (!rep.pass())
    fail(ErrorKind::inconsistent, "synthesized connection fails " + rep.failures.front().axiom);
  return ell;
}

Vec solve_transfer(const ComoduleAlgebra& src, const ComoduleAlgebra& dst, const Mat& pi_src, const Mat& pi_dst,
                   const Vec& x, const Vec& g) {
  if (pi_src.cols() != src.dim() || pi_dst.cols() != dst.dim() || pi_src.rows() != pi_dst.rows())
    fail(ErrorKind::dimension_mismatch, "transfer maps do not share a target");
  if (src.coact(x) != tensor(x, g)) fail(ErrorKind::precondition, "transfer argument is not homogeneous for g");
  const std::size_t nd = dst.dim(), nh = dst.hopf().dim();
  Mat system = (dst.coaction() - kron(Mat::identity(nd), column_of(g))).vstack(pi_dst);
  Vec rhs = concat(Vec(nd * nh), pi_src * x);
  auto y = solve(system, rhs);
  if (!y) fail(ErrorKind::inconsistent, "no colinear transfer exists for this element");
  return *y;
}

SubspaceMap build_transfer(const ComoduleAlgebra& src, const ComoduleAlgebra& dst, const Mat& pi_src,
                           const Mat& pi_dst, const std::vector<Vec>& grouplikes) {
  const Vec& one = src.algebra().unit();
  std::vector<Vec> vectors, values;
  for (const auto& g : grouplikes) {
    Subspace comp = homogeneous_component(src, g);
    std::vector<Vec> basis;
    if (comp.contains(one)) {
      vectors.push_back(one);
      values.push_back(dst.algebra().unit());
      basis = complement_in(Subspace::span(src.dim(), std::vector<Vec>{one}), comp).basis();
    } else {
      basis = comp.basis();
    }
    for (const auto& v : basis) {
      values.push_back(solve_transfer(src, dst, pi_src, pi_dst, v, g));
      vectors.push_back(v);
    }
  }
  Subspace full = Subspace::full(src.dim());
  if (vectors.size() != src.dim() || Subspace::span(src.dim(), vectors) != full)
    fail(ErrorKind::precondition, "homogeneous components of the given group-likes do not span the source");
  return SubspaceMap::from_basis_images(full, vectors, values, dst.dim());
}

bool transfer_equations_hold(const SubspaceMap& f, const ComoduleAlgebra& src, const ComoduleAlgebra& dst,
                             const Mat& pi_src, const Mat& pi_dst) {
  if (f.domain().ambient_dim() != src.dim() || f.codomain_dim() != dst.dim()) return false;
  if (f.domain().dim() != src.dim()) return false;
  for (std::size_t b = 0; b < src.dim(); ++b) {
    Vec e = Vec::unit(src.dim(), b);
    if (pi_dst * f.apply(e) != pi_src * e) return false;
  }
  return f.apply(src.algebra().unit()) == dst.algebra().unit() && is_colinear(f, src, dst);
}

StrongConnection glue_two(const MultiPullback& fp, const StrongConnection& ell1, const StrongConnection& ell2,
                          const SubspaceMap& f12, const SubspaceMap& f21) {
  const GluingFamily& fam = fp.family;
  if (fam.size() != 2 || !fp.comodule) fail(ErrorKind::precondition, "glue_two needs a two-piece comodule pullback");
  const ComoduleAlgebra& p0 = *fam.component_coaction(0);
  const ComoduleAlgebra& p1 = *fam.component_coaction(1);
  if (ell1.target().dim() != p0.dim() || ell2.target().dim() != p1.dim())
    fail(ErrorKind::dimension_mismatch, "piece connections do not match the pullback components");
  const Mat& pi01 = fam.map(0, 1).matrix();
  const Mat& pi10 = fam.map(1, 0).matrix();
  if (!transfer_equations_hold(f12, p0, p1, pi01, pi10) || !transfer_equations_hold(f21, p1, p0, pi10, pi01))
    fail(ErrorKind::precondition, "transfer maps fail the gluing equations");

  const HopfAlgebra& h = fp.comodule->hopf();
  const StructureAlgebra& a1 = p1.algebra();
  const Vec zero0(p0.dim());
  std::vector<StrongConnection::Terms> out(h.dim());
  for (std::size_t b = 0; b < h.dim(); ++b) {
    for (const auto& [l, r] : ell1.terms(b))
      out[b].emplace_back(fp.from_tuple({l, f12.apply(l)}), fp.from_tuple({r, f12.apply(r)}));
    for (const auto& [x, y, c] : coproduct_terms(h, b)) {
      Vec k = h.counit()[x] * a1.unit();
      for (const auto& [l, r] : ell1.terms(x)) k -= a1.multiply(f12.apply(l), f12.apply(r));
      if (k.is_zero()) continue;
      for (const auto& [l2, r2] : ell2.terms(y)) {
        Vec left = c * a1.multiply(k, l2);
        if (left.is_zero()) continue;
        out[b].emplace_back(fp.from_tuple({zero0, left}), fp.from_tuple({f21.apply(r2), r2}));
      }
    }
  }
  StrongConnection ell(fp.comodule, std::move(out));
  auto rep = verify_connection(ell);
  if (!rep.pass()) fail(ErrorKind::inconsistent, "glued connection fails " + rep.failures.front().axiom);
  return ell;
}

std::pair<std::vector<Vec>, std::vector<Vec>> minimal_legs(const Vec& t, std::size_t dim) {
  if (t.dim() != dim * dim) fail(ErrorKind::dimension_mismatch, "minimal_legs");
  Mat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!hopfglue::is_zero(t[i * dim + j])) m.set(i, j, t[i * dim + j]);
  RrefResult rr = rref_full(m);
  std::vector<Vec> left, right;
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
    left.push_back(m.col_vec(rr.pivots[k]));
    right.push_back(rr.reduced.row_vec(k));
  }
  return {std::move(left), std::move(right)};
}

ProjectorResult projector_from_legs(const ComoduleAlgebra& p, std::vector<Vec> left, std::vector<Vec> right) {
  if (left.size() != right.size()) fail(ErrorKind::dimension_mismatch, "leg lists differ in length");
  const std::size_t n = left.size();
  if (Subspace::span(p.dim(), left).dim() != n || Subspace::span(p.dim(), right).dim() != n)
    fail(ErrorKind::precondition, "dependent legs");
  const StructureAlgebra& a = p.algebra();
  ProjectorResult res;
  res.size = n;
  res.entries.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) res.entries[i][j] = a.multiply(right[i], left[j]);
  res.idempotent = true;
  res.coinvariant = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec sq(p.dim());
      for (std::size_t k = 0; k < n; ++k) sq += a.multiply(res.entries[i][k], res.entries[k][j]);
      if (sq != res.entries[i][j]) res.idempotent = false;
      if (!is_coinvariant(p, res.entries[i][j])) res.coinvariant = false;
    }
  res.left_legs = std::move(left);
  res.right_legs = std::move(right);
  return res;
}

ProjectorResult chern_galois_projector(const StrongConnection& ell, const GroupLike& g) {
  auto [left, right] = minimal_legs(ell.evaluate(g.element()), ell.target().dim());
  return projector_from_legs(ell.target(), std::move(left), std::move(right));
}

}  // namespace hopfglue
