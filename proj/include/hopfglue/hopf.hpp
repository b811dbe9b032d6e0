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
#include <optional>
#include <utility>
#include <vector>

#include "hopfglue/algebra.hpp"

namespace hopfglue {

// Multiplication table of a finite group on {0, ..., n-1}.
struct GroupTable {
  std::vector<std::vector<std::size_t>> mul;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::size_t order() const { return mul.size(); }
};
// Validates closure, associativity, identity and inverses.
GroupTable make_group_table(std::vector<std::vector<std::size_t>> mul);
GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group3();

class HopfAlgebra {
 public:
  // comult is dim^2 x dim, counit has length dim, antipode is dim x dim.
  // Every Hopf axiom is checked, and the antipode must be invertible.
  HopfAlgebra(AlgebraPtr algebra, Mat comult, Vec counit, Mat antipode);

  const StructureAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return algebra_->dim(); }
  const Vec& unit() const { return algebra_->unit(); }
  const Mat& comult() const { return comult_; }
  const Vec& counit() const { return counit_; }
  const Mat& antipode() const { return antipode_; }

  Vec coproduct(const Vec& h) const { return comult_ * h; }
  Scalar epsilon(const Vec& h) const { return dot(counit_, h); }
  // Coefficient of e_x (x) e_y in Delta(e_b).
  Scalar coproduct_coeff(std::size_t b, std::size_t x, std::size_t y) const {
    return comult_.at(x * dim() + y, b);
  }

 private:
  AlgebraPtr algebra_;
  Mat comult_;
  Vec counit_;
  Mat antipode_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

bool is_cocommutative(const HopfAlgebra& h);
// Functions on G in the point-indicator basis.
HopfPtr function_hopf(const GroupTable& g);
// The group algebra of G in the group-element basis.
HopfPtr group_hopf(const GroupTable& g);
// The same Hopf algebra in a new basis (column a of `change` is new basis vector a).
HopfPtr rebase(const HopfAlgebra& h, const Mat& change);
// Normalized two-sided Haar functional: lambda(h<1>) h<2> = lambda(h) 1 = h<1> lambda(h<2>),
// lambda(1) = 1. Exists exactly when H is cosemisimple.
std::optional<Vec> haar_functional(const HopfAlgebra& h);

class GroupLike {
 public:
  GroupLike(HopfPtr hopf, Vec element);  // checks Delta(g) = g (x) g and epsilon(g) = 1
  const Vec& element() const { return element_; }
  const HopfPtr& hopf() const { return hopf_; }

 private:
  HopfPtr hopf_;
  Vec element_;
};

class ComoduleAlgebra {
 public:
  // coaction is (dim P * dim H) x dim P. Coassociativity, counitality,
  // multiplicativity and rho(1) = 1 (x) 1 are checked.
  ComoduleAlgebra(AlgebraPtr algebra, HopfPtr hopf, Mat coaction);

  const StructureAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const HopfAlgebra& hopf() const { return *hopf_; }
  const HopfPtr& hopf_ptr() const { return hopf_; }
  const Mat& coaction() const { return coaction_; }
  std::size_t dim() const { return algebra_->dim(); }
  Vec coact(const Vec& p) const { return coaction_ * p; }

 private:
  AlgebraPtr algebra_;
  HopfPtr hopf_;
  Mat coaction_;
};

using ComodulePtr = std::shared_ptr<const ComoduleAlgebra>;

ComodulePtr make_comodule(AlgebraPtr algebra, HopfPtr hopf, Mat coaction);
ComodulePtr trivial_comodule(AlgebraPtr algebra, HopfPtr hopf);
ComodulePtr regular_comodule(HopfPtr hopf);
// Same comodule algebra, Hopf algebra rebased by `change`.
ComodulePtr with_rebased_hopf(const ComoduleAlgebra& p, HopfPtr rebased, const Mat& change);

Subspace coinvariants(const ComoduleAlgebra& p);
// {p : rho(p) = p (x) g}
Subspace homogeneous_component(const ComoduleAlgebra& p, const Vec& g);
bool is_subcomodule(const ComoduleAlgebra& p, const Subspace& v);
bool is_colinear(const Mat& f, const ComoduleAlgebra& domain, const ComoduleAlgebra& codomain);
// Colinearity of a map defined on a subcomodule of `domain`.
bool is_colinear(const SubspaceMap& f, const ComoduleAlgebra& domain, const ComoduleAlgebra& codomain);
Subspace comodule_closure(const ComoduleAlgebra& p, const Subspace& seed);
// rho(x) = sum p_h (x) e_h over H basis vectors with nonzero first leg.
std::vector<std::pair<Vec, Vec>> sweedler(const ComoduleAlgebra& p, const Vec& x);
// Structure of a comodule algebra restricted to a subalgebra that is also a subcomodule.
ComodulePtr restrict_comodule(const ComoduleAlgebra& p, const Subalgebra& sub);

}  // namespace hopfglue
