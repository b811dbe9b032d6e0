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

#include "hopfglue/hopf.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "hopfglue/tensor.hpp"

namespace hopfglue {

// ---------------------------------------------------------------- groups

GroupTable make_group_table(std::vector<std::vector<std::size_t>> mul) {
  const std::size_t n = mul.size();
  if (n == 0) fail(ErrorKind::invalid_structure, "group table is empty");
  for (const auto& row : mul) {
    if (row.size() != n) fail(ErrorKind::invalid_structure, "group table is not square");
    for (auto x : row)
      if (x >= n) fail(ErrorKind::invalid_structure, "group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          fail(ErrorKind::invalid_structure, "group table is not associative");
  GroupTable g;
  g.mul = std::move(mul);
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = g.mul[e][x] == x && g.mul[x][e] == x;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::invalid_structure, "group table has no identity");
  g.inverse.assign(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.mul[x][y] == g.identity && g.mul[y][x] == g.identity) g.inverse[x] = y;
  for (auto y : g.inverse)
    if (y == n) fail(ErrorKind::invalid_structure, "group table element without inverse");
  return g;
}

GroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return make_group_table(std::move(mul));
}

GroupTable symmetric_group3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> mul(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return make_group_table(std::move(mul));
}

// ---------------------------------------------------------------- Hopf algebras

namespace {

Mat row_functional(const Vec& f) {
  Mat m(1, f.dim());
  m.set_row(0, f);
  return m;
}

Mat unit_column(const Vec& u) {
  Mat m(u.dim(), 1);
  m.set_column(0, u);
  return m;
}

}  // namespace

HopfAlgebra::HopfAlgebra(AlgebraPtr algebra, Mat comult, Vec counit, Mat antipode)
    : algebra_(std::move(algebra)), comult_(std::move(comult)), counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t n = algebra_->dim();
  if (comult_.rows() != n * n || comult_.cols() != n || counit_.dim() != n || antipode_.rows() != n ||
      antipode_.cols() != n)
    fail(ErrorKind::dimension_mismatch, "Hopf structure maps have inconsistent sizes");
  const Mat id = Mat::identity(n);
  if (kron(comult_, id) * comult_ != kron(id, comult_) * comult_)
    fail(ErrorKind::invalid_structure, "comultiplication is not coassociative");
  const Mat eps = row_functional(counit_);
  if (kron(eps, id) * comult_ != id || kron(id, eps) * comult_ != id)
    fail(ErrorKind::invalid_structure, "counit laws fail");
  const auto& a = *algebra_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ei = Vec::unit(n, i), ej = Vec::unit(n, j);
      if (coproduct(a.product(i, j)) != tensor_multiply(a, a, coproduct(ei), coproduct(ej)))
        fail(ErrorKind::invalid_structure, "comultiplication is not multiplicative");
      if (epsilon(a.product(i, j)) != counit_[i] * counit_[j])
        fail(ErrorKind::invalid_structure, "counit is not multiplicative");
    }
  if (coproduct(a.unit()) != tensor(a.unit(), a.unit()))
    fail(ErrorKind::invalid_structure, "comultiplication does not preserve the unit");
  if (epsilon(a.unit()) != 1) fail(ErrorKind::invalid_structure, "counit of the unit is not 1");
  const Mat s_id = kron(antipode_, id), id_s = kron(id, antipode_);
  for (std::size_t b = 0; b < n; ++b) {
    Vec d = coproduct(Vec::unit(n, b));
    Vec expect = counit_[b] * a.unit();
    if (multiply_legs(a, s_id * d) != expect || multiply_legs(a, id_s * d) != expect)
      fail(ErrorKind::invalid_structure, "antipode axiom fails on basis vector " + std::to_string(b));
  }
  if (rank(antipode_) != n) fail(ErrorKind::invalid_structure, "antipode is not bijective");
}

bool is_cocommutative(const HopfAlgebra& h) {
  return flip_matrix(h.dim(), h.dim()) * h.comult() == h.comult();
}

HopfPtr function_hopf(const GroupTable& g) {
  const std::size_t n = g.order();
  auto alg = function_algebra(n);
  Mat comult(n * n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) comult.set(x * n + y, g.mul[x][y], Scalar(1));
  Vec counit = Vec::unit(n, g.identity);
  Mat antipode(n, n);
  for (std::size_t x = 0; x < n; ++x) antipode.set(g.inverse[x], x, Scalar(1));
  return std::make_shared<const HopfAlgebra>(alg, std::move(comult), std::move(counit), std::move(antipode));
}

HopfPtr group_hopf(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Vec> products;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) products.push_back(Vec::unit(n, g.mul[a][b]));
  auto alg = make_algebra(n, std::move(products), Vec::unit(n, g.identity));
  Mat comult(n * n, n);
  for (std::size_t x = 0; x < n; ++x) comult.set(x * n + x, x, Scalar(1));
  Vec counit(n);
  for (std::size_t x = 0; x < n; ++x) counit[x] = 1;
  Mat antipode(n, n);
  for (std::size_t x = 0; x < n; ++x) antipode.set(g.inverse[x], x, Scalar(1));
  return std::make_shared<const HopfAlgebra>(alg, std::move(comult), std::move(counit), std::move(antipode));
}

HopfPtr rebase(const HopfAlgebra& h, const Mat& change) {
  auto inv = inverse(change);
  if (!inv) fail(ErrorKind::precondition, "basis change matrix is singular");
  auto alg = rebase(h.algebra(), change);
  Mat comult = kron(*inv, *inv) * h.comult() * change;
  Vec counit(h.dim());
  for (std::size_t a = 0; a < h.dim(); ++a) counit[a] = h.epsilon(change.col_vec(a));
  Mat antipode = *inv * h.antipode() * change;
  return std::make_shared<const HopfAlgebra>(alg, std::move(comult), std::move(counit), std::move(antipode));
}

std::optional<Vec> haar_functional(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const auto& a = h.algebra();
  // Unknown lambda; each basis vector b contributes 2n equations plus one normalization row.
  Mat sys(2 * n * n + 1, n);
  std::size_t row = 0;
  for (std::size_t b = 0; b < n; ++b) {
    for (int side = 0; side < 2; ++side) {
      // side 0: sum_x,y c^b_xy lambda_x e_y - lambda_b 1; side 1: sum c^b_xy e_x lambda_y - lambda_b 1
      std::vector<Vec> rows(n, Vec(n));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Scalar c = h.coproduct_coeff(b, x, y);
          if (is_zero(c)) continue;
          std::size_t lam = side == 0 ? x : y, out = side == 0 ? y : x;
          rows[out][lam] += c;
        }
      for (std::size_t k = 0; k < n; ++k) {
        rows[k][b] -= a.unit()[k];
        sys.set_row(row++, rows[k]);
      }
    }
  }
  sys.set_row(row, a.unit());
  Vec rhs(sys.rows());
  rhs[row] = 1;
  return solve(sys, rhs);
}

GroupLike::GroupLike(HopfPtr hopf, Vec element) : hopf_(std::move(hopf)), element_(std::move(element)) {
  if (element_.dim() != hopf_->dim()) fail(ErrorKind::dimension_mismatch, "group-like element length");
  if (hopf_->coproduct(element_) != tensor(element_, element_) || hopf_->epsilon(element_) != 1)
    fail(ErrorKind::invalid_structure, "element is not group-like");
}

// ---------------------------------------------------------------- comodule algebras

ComoduleAlgebra::ComoduleAlgebra(AlgebraPtr algebra, HopfPtr hopf, Mat coaction)
    : algebra_(std::move(algebra)), hopf_(std::move(hopf)), coaction_(std::move(coaction)) {
  const std::size_t np = algebra_->dim(), nh = hopf_->dim();
  if (coaction_.rows() != np * nh || coaction_.cols() != np)
    fail(ErrorKind::dimension_mismatch, "coaction must be (dim P * dim H) x dim P");
  const Mat ip = Mat::identity(np), ih = Mat::identity(nh);
  if (kron(coaction_, ih) * coaction_ != kron(ip, hopf_->comult()) * coaction_)
    fail(ErrorKind::invalid_structure, "coaction is not coassociative");
  if (kron(ip, row_functional(hopf_->counit())) * coaction_ != ip)
    fail(ErrorKind::invalid_structure, "coaction is not counital");
  const auto& p = *algebra_;
  const auto& h = hopf_->algebra();
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j)
      if (coact(p.product(i, j)) !=
          tensor_multiply(p, h, coact(Vec::unit(np, i)), coact(Vec::unit(np, j))))
        fail(ErrorKind::invalid_structure,
             "coaction is not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (coact(p.unit()) != tensor(p.unit(), h.unit()))
    fail(ErrorKind::invalid_structure, "coaction does not send 1 to 1 (x) 1");
}

ComodulePtr make_comodule(AlgebraPtr algebra, HopfPtr hopf, Mat coaction) {
  return std::make_shared<const ComoduleAlgebra>(std::move(algebra), std::move(hopf), std::move(coaction));
}

ComodulePtr trivial_comodule(AlgebraPtr algebra, HopfPtr hopf) {
  Mat c = kron(Mat::identity(algebra->dim()), unit_column(hopf->unit()));
  return make_comodule(std::move(algebra), std::move(hopf), std::move(c));
}

ComodulePtr regular_comodule(HopfPtr hopf) {
  auto alg = hopf->algebra_ptr();
  Mat c = hopf->comult();
  return make_comodule(std::move(alg), std::move(hopf), std::move(c));
}

ComodulePtr with_rebased_hopf(const ComoduleAlgebra& p, HopfPtr rebased, const Mat& change) {
  auto inv = inverse(change);
  if (!inv) fail(ErrorKind::precondition, "basis change matrix is singular");
  Mat c = kron(Mat::identity(p.dim()), *inv) * p.coaction();
  return make_comodule(p.algebra_ptr(), std::move(rebased), std::move(c));
}

Subspace homogeneous_component(const ComoduleAlgebra& p, const Vec& g) {
  Mat along = kron(Mat::identity(p.dim()), unit_column(g));
  return kernel(p.coaction() - along);
}

Subspace coinvariants(const ComoduleAlgebra& p) { return homogeneous_component(p, p.hopf().unit()); }

bool is_subcomodule(const ComoduleAlgebra& p, const Subspace& v) {
  const std::size_t np = p.dim(), nh = p.hopf().dim();
  for (const auto& b : v.basis()) {
    Vec c = p.coact(b);
    for (std::size_t h = 0; h < nh; ++h)
      if (!v.contains(slice_left(c, np, nh, h))) return false;
  }
  return true;
}

bool is_colinear(const Mat& f, const ComoduleAlgebra& domain, const ComoduleAlgebra& codomain) {
  if (f.cols() != domain.dim() || f.rows() != codomain.dim()) return false;
  return codomain.coaction() * f == kron(f, Mat::identity(domain.hopf().dim())) * domain.coaction();
}

bool is_colinear(const SubspaceMap& f, const ComoduleAlgebra& domain, const ComoduleAlgebra& codomain) {
  if (f.domain().ambient_dim() != domain.dim() || f.codomain_dim() != codomain.dim()) return false;
  if (!is_subcomodule(domain, f.domain())) return false;
  const std::size_t nd = domain.dim(), nc = codomain.dim(), nh = domain.hopf().dim();
  for (const auto& b : f.domain().basis()) {
    Vec lhs = codomain.coact(f.apply(b));
    Vec c = domain.coact(b);
    Vec rhs(nc * nh);
    for (std::size_t h = 0; h < nh; ++h) rhs += tensor(f.apply(slice_left(c, nd, nh, h)), Vec::unit(nh, h));
    if (lhs != rhs) return false;
  }
  return true;
}

Subspace comodule_closure(const ComoduleAlgebra& p, const Subspace& seed) {
  const std::size_t np = p.dim(), nh = p.hopf().dim();
  Subspace v = seed;
  while (true) {
    std::vector<Vec> gens = v.basis();
    for (const auto& b : v.basis()) {
      Vec c = p.coact(b);
      for (std::size_t h = 0; h < nh; ++h) gens.push_back(slice_left(c, np, nh, h));
    }
    Subspace next = Subspace::span(np, gens);
    if (next == v) return v;
    v = std::move(next);
  }
}

std::vector<std::pair<Vec, Vec>> sweedler(const ComoduleAlgebra& p, const Vec& x) {
  const std::size_t np = p.dim(), nh = p.hopf().dim();
  Vec c = p.coact(x);
  std::vector<std::pair<Vec, Vec>> out;
  for (std::size_t h = 0; h < nh; ++h) {
    Vec leg = slice_left(c, np, nh, h);
    if (!leg.is_zero()) out.emplace_back(std::move(leg), Vec::unit(nh, h));
  }
  return out;
}

ComodulePtr restrict_comodule(const ComoduleAlgebra& p, const Subalgebra& sub) {
  if (!is_subcomodule(p, sub.space)) fail(ErrorKind::precondition, "subalgebra is not a subcomodule");
  const std::size_t np = p.dim(), nh = p.hopf().dim(), m = sub.space.dim();
  Mat c(m * nh, m);
  for (std::size_t k = 0; k < m; ++k) {
    Vec rho = p.coact(sub.space.basis()[k]);
    for (std::size_t h = 0; h < nh; ++h) {
      Vec coords = sub.to_coordinates(slice_left(rho, np, nh, h));
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero(coords[j])) c.set(j * nh + h, k, coords[j]);
    }
  }
  return make_comodule(sub.algebra, p.hopf_ptr(), std::move(c));
}

}  // namespace hopfglue
