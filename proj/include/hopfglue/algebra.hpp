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

#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hopfglue/exactla.hpp"

namespace hopfglue {

// Finite-dimensional unital associative algebra: e_i e_j = sum_k c[i][j][k] e_k.
class StructureAlgebra {
 public:
  // products[i*dim + j] = e_i e_j. Associativity and the unit laws are checked.
  StructureAlgebra(std::size_t dim, std::vector<Vec> products, Vec unit);

  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const Vec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  const std::vector<Vec>& table() const { return products_; }
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const { return product(i, j)[k]; }

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec zero() const { return Vec(dim_); }
  // Matrix of y -> x y.
  Mat left_multiplication(const Vec& x) const;
  // Matrix of y -> y x.
  Mat right_multiplication(const Vec& x) const;

 private:
  std::size_t dim_;
  std::vector<Vec> products_;
  Vec unit_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

// Convenience builders.
AlgebraPtr make_algebra(std::size_t dim, std::vector<Vec> products, Vec unit);
// Functions on n points, point-indicator basis.
AlgebraPtr function_algebra(std::size_t points);
// The same algebra in a different basis: new basis vector a is column a of `change`.
AlgebraPtr rebase(const StructureAlgebra& a, const Mat& change);

class AlgMorphism {
 public:
  // Verifies multiplicativity on basis pairs and unitality.
  AlgMorphism(AlgebraPtr domain, AlgebraPtr codomain, Mat matrix);

  const AlgebraPtr& domain() const { return domain_; }
  const AlgebraPtr& codomain() const { return codomain_; }
  const Mat& matrix() const { return matrix_; }
  Vec apply(const Vec& x) const { return matrix_ * x; }

 private:
  AlgebraPtr domain_;
  AlgebraPtr codomain_;
  Mat matrix_;
};

AlgMorphism identity_morphism(AlgebraPtr a);
AlgMorphism compose(const AlgMorphism& g, const AlgMorphism& f);  // g after f

class Ideal {
 public:
  // Verifies two-sided closure under multiplication by basis elements.
  Ideal(AlgebraPtr owner, Subspace space);
  const AlgebraPtr& owner() const { return owner_; }
  const Subspace& space() const { return space_; }

 private:
  AlgebraPtr owner_;
  Subspace space_;
};

bool is_ideal(const StructureAlgebra& a, const Subspace& s);
bool is_unital_subalgebra(const StructureAlgebra& a, const Subspace& s);

bool is_surjective(const AlgMorphism& f);
Ideal morphism_kernel(const AlgMorphism& f);

struct Quotient {
  AlgebraPtr algebra;
  std::shared_ptr<const AlgMorphism> projection;
  // ambient x quotient_dim; column k is the representative of the k-th quotient basis vector.
  Mat section;
  Subspace representatives;  // complement_in(ideal, full space)
};
Quotient quotient(const Ideal& ideal);

struct Product {
  AlgebraPtr algebra;
  std::vector<AlgMorphism> projections;
  std::vector<std::size_t> offsets;  // start of each component's coordinates
  // Linear (non-unital) inclusion of component i.
  Mat inclusion(std::size_t i) const;
};
Product direct_product(std::span<const AlgebraPtr> factors);

// A unital subalgebra expressed in the coordinates of its own canonical basis.
struct Subalgebra {
  AlgebraPtr ambient;
  Subspace space;
  AlgebraPtr algebra;
  Mat inclusion() const { return space.basis_matrix(); }
  Vec to_ambient(const Vec& coords) const { return inclusion() * coords; }
  Vec to_coordinates(const Vec& x) const;
};
Subalgebra make_subalgebra(AlgebraPtr ambient, const Subspace& space);

// f restricted to `sub`, re-expressed on sub's canonical basis; the codomain is
// the image subalgebra in its own canonical basis.
struct RestrictedMorphism {
  Subalgebra domain;
  Subalgebra codomain;
  std::shared_ptr<const AlgMorphism> morphism;
};
RestrictedMorphism subalgebra_restrict(const AlgMorphism& f, const Subspace& sub);

}  // namespace hopfglue
