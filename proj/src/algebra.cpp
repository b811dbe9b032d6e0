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

#include "hopfglue/algebra.hpp"

#include <string>

#include "hopfglue/kernels.hpp"

namespace hopfglue {

StructureAlgebra::StructureAlgebra(std::size_t dim, std::vector<Vec> products, Vec unit)
    : dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != dim_ * dim_)
    fail(ErrorKind::dimension_mismatch, "structure table must have dim^2 products");
  for (const auto& p : products_)
    if (p.dim() != dim_) fail(ErrorKind::dimension_mismatch, "structure table entry has wrong length");
  if (unit_.dim() != dim_) fail(ErrorKind::dimension_mismatch, "unit has wrong length");
  if (auto bad = kernels::associativity_failure(products_, dim_, kernels::Mode::parallel))
    fail(ErrorKind::invalid_structure, "structure constants are not associative at (" +
                                           std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) +
                                           "," + std::to_string((*bad)[2]) + ")");
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec e = Vec::unit(dim_, i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      fail(ErrorKind::invalid_structure, "unit law fails on basis vector " + std::to_string(i));
  }
}

Vec StructureAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) fail(ErrorKind::dimension_mismatch, "algebra product operand");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      out.axpy(x[i] * y[j], products_[i * dim_ + j]);
    }
  }
  return out;
}

Mat StructureAlgebra::left_multiplication(const Vec& x) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(x, Vec::unit(dim_, j)));
  return Mat::from_columns(dim_, cols);
}

Mat StructureAlgebra::right_multiplication(const Vec& x) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(Vec::unit(dim_, j), x));
  return Mat::from_columns(dim_, cols);
}

AlgebraPtr make_algebra(std::size_t dim, std::vector<Vec> products, Vec unit) {
  return std::make_shared<const StructureAlgebra>(dim, std::move(products), std::move(unit));
}

AlgebraPtr function_algebra(std::size_t points) {
  std::vector<Vec> products(points * points, Vec(points));
  for (std::size_t i = 0; i < points; ++i) products[i * points + i] = Vec::unit(points, i);
  Vec unit(points);
  for (std::size_t i = 0; i < points; ++i) unit[i] = 1;
  return make_algebra(points, std::move(products), std::move(unit));
}

AlgebraPtr rebase(const StructureAlgebra& a, const Mat& change) {
  auto inv = inverse(change);
  if (!inv) fail(ErrorKind::precondition, "basis change matrix is singular");
  const std::size_t n = a.dim();
  std::vector<Vec> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      products.push_back(*inv * a.multiply(change.col_vec(i), change.col_vec(j)));
  return make_algebra(n, std::move(products), *inv * a.unit());
}

// ---------------------------------------------------------------- morphisms

AlgMorphism::AlgMorphism(AlgebraPtr domain, AlgebraPtr codomain, Mat matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_->dim() || matrix_.cols() != domain_->dim())
    fail(ErrorKind::dimension_mismatch, "morphism matrix must be codomain.dim x domain.dim");
  const std::size_t n = domain_->dim();
  std::vector<Vec> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(matrix_.col_vec(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (matrix_ * domain_->product(i, j) != codomain_->multiply(img[i], img[j]))
        fail(ErrorKind::invalid_structure,
             "map is not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (matrix_ * domain_->unit() != codomain_->unit())
    fail(ErrorKind::invalid_structure, "map does not send unit to unit");
}

AlgMorphism identity_morphism(AlgebraPtr a) {
  std::size_t n = a->dim();
  return AlgMorphism(a, a, Mat::identity(n));
}

AlgMorphism compose(const AlgMorphism& g, const AlgMorphism& f) {
  if (f.codomain()->dim() != g.domain()->dim())
    fail(ErrorKind::dimension_mismatch, "composition of incompatible morphisms");
  return AlgMorphism(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

bool is_ideal(const StructureAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) return false;
  for (const auto& b : s.basis())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec e = Vec::unit(a.dim(), i);
      if (!s.contains(a.multiply(e, b)) || !s.contains(a.multiply(b, e))) return false;
    }
  return true;
}

bool is_unital_subalgebra(const StructureAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim() || !s.contains(a.unit())) return false;
  for (const auto& x : s.basis())
    for (const auto& y : s.basis())
      if (!s.contains(a.multiply(x, y))) return false;
  return true;
}

Ideal::Ideal(AlgebraPtr owner, Subspace space) : owner_(std::move(owner)), space_(std::move(space)) {
  if (!is_ideal(*owner_, space_)) fail(ErrorKind::invalid_structure, "subspace is not a two-sided ideal");
}

bool is_surjective(const AlgMorphism& f) { return rank(f.matrix()) == f.codomain()->dim(); }

Ideal morphism_kernel(const AlgMorphism& f) { return Ideal(f.domain(), kernel(f.matrix())); }

Quotient quotient(const Ideal& ideal) {
  const auto& a = *ideal.owner();
  LinearQuotient lq = linear_quotient(ideal.space());
  const std::size_t m = lq.dim();
  const auto& reps = lq.representatives.basis();
  std::vector<Vec> products;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) products.push_back(lq.projection * a.multiply(reps[i], reps[j]));
  auto qa = make_algebra(m, std::move(products), lq.projection * a.unit());
  auto pi = std::make_shared<const AlgMorphism>(ideal.owner(), qa, lq.projection);
  return {qa, pi, lq.section, lq.representatives};
}

Mat Product::inclusion(std::size_t i) const {
  const std::size_t di = projections.at(i).codomain()->dim();
  Mat m(algebra->dim(), di);
  for (std::size_t k = 0; k < di; ++k) m.set(offsets[i] + k, k, Scalar(1));
  return m;
}

Product direct_product(std::span<const AlgebraPtr> factors) {
  if (factors.empty()) fail(ErrorKind::precondition, "direct product of an empty list");
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& f : factors) {
    offsets.push_back(total);
    total += f->dim();
  }
  std::vector<Vec> products(total * total, Vec(total));
  Vec unit(total);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& a = *factors[f];
    const std::size_t o = offsets[f];
    for (std::size_t i = 0; i < a.dim(); ++i) {
      unit[o + i] = a.unit()[i];
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec& dst = products[(o + i) * total + (o + j)];
        const Vec& src = a.product(i, j);
        for (std::size_t k = 0; k < a.dim(); ++k) dst[o + k] = src[k];
      }
    }
  }
  auto alg = make_algebra(total, std::move(products), std::move(unit));
  std::vector<AlgMorphism> projections;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    Mat p(factors[f]->dim(), total);
    for (std::size_t k = 0; k < factors[f]->dim(); ++k) p.set(k, offsets[f] + k, Scalar(1));
    projections.emplace_back(alg, factors[f], std::move(p));
  }
  return {alg, std::move(projections), std::move(offsets)};
}

Vec Subalgebra::to_coordinates(const Vec& x) const {
  auto c = space.coordinates(x);
  if (!c) fail(ErrorKind::precondition, "element is outside the subalgebra");
  return *c;
}

Subalgebra make_subalgebra(AlgebraPtr ambient, const Subspace& space) {
  if (!is_unital_subalgebra(*ambient, space))
    fail(ErrorKind::precondition, "subspace is not a unital subalgebra");
  const std::size_t m = space.dim();
  std::vector<Vec> products;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      products.push_back(*space.coordinates(ambient->multiply(space.basis()[i], space.basis()[j])));
  auto alg = make_algebra(m, std::move(products), *space.coordinates(ambient->unit()));
  return {std::move(ambient), space, std::move(alg)};
}

RestrictedMorphism subalgebra_restrict(const AlgMorphism& f, const Subspace& sub) {
  Subalgebra dom = make_subalgebra(f.domain(), sub);
  Subalgebra cod = make_subalgebra(f.codomain(), image(f.matrix(), sub));
  Mat m = cod.space.coordinate_matrix() * f.matrix() * sub.basis_matrix();
  auto morph = std::make_shared<const AlgMorphism>(dom.algebra, cod.algebra, std::move(m));
  return {std::move(dom), std::move(cod), std::move(morph)};
}

}  // namespace hopfglue
