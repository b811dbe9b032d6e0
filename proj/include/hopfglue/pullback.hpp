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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfglue/connection.hpp"
#include "hopfglue/lattice.hpp"

namespace hopfglue {

using IndexPair = std::pair<std::size_t, std::size_t>;

// Gluing maps pi^i_j : A_i -> A_ij with A_ij = A_ji.
class GluingFamily {
 public:
  GluingFamily() = default;
  // targets are keyed by (min, max); maps by ordered (i, j), i != j.
  // Surjectivity and domain/codomain consistency are checked.
  GluingFamily(std::vector<AlgebraPtr> components, std::map<IndexPair, AlgebraPtr> targets,
               std::map<IndexPair, AlgMorphism> maps);

  std::size_t size() const { return components_.size(); }
  const AlgebraPtr& component(std::size_t i) const { return components_.at(i); }
  const std::vector<AlgebraPtr>& components() const { return components_; }
  const AlgebraPtr& target(std::size_t i, std::size_t j) const;
  const AlgMorphism& map(std::size_t i, std::size_t j) const;
  const std::map<IndexPair, AlgMorphism>& maps() const { return maps_; }
  const std::map<IndexPair, AlgebraPtr>& targets() const { return targets_; }

  // Optional comodule structures on components and targets, over one Hopf algebra.
  // Colinearity of every gluing map is checked.
  void set_coactions(std::vector<ComodulePtr> components, std::map<IndexPair, ComodulePtr> targets);
  bool has_coactions() const { return !component_coactions_.empty(); }
  const ComodulePtr& component_coaction(std::size_t i) const { return component_coactions_.at(i); }
  const ComodulePtr& target_coaction(std::size_t i, std::size_t j) const;

  // Replaces one gluing map (used to build perturbed families).
  void replace_map(std::size_t i, std::size_t j, AlgMorphism m);

 private:
  std::vector<AlgebraPtr> components_;
  std::map<IndexPair, AlgebraPtr> targets_;
  std::map<IndexPair, AlgMorphism> maps_;
  std::vector<ComodulePtr> component_coactions_;
  std::map<IndexPair, ComodulePtr> target_coactions_;
};

struct MultiPullback {
  GluingFamily family;
  Product product;
  Subalgebra total;                      // inside the product algebra
  std::vector<AlgMorphism> projections;  // total -> A_i
  ComodulePtr comodule;                  // set when the family carries coactions

  std::size_t dim() const { return total.space.dim(); }
  const AlgebraPtr& algebra() const { return total.algebra; }
  // Total coordinates of a tuple; throws when the tuple violates a gluing constraint.
  Vec from_tuple(const std::vector<Vec>& parts) const;
  std::optional<Vec> try_from_tuple(const std::vector<Vec>& parts) const;
  std::vector<Vec> to_tuple(const Vec& x) const;
};

MultiPullback multipullback(const GluingFamily& f);

struct CocycleFailure {
  std::size_t i = 0, j = 0, k = 0;
  int condition = 1;  // 1: kernel images differ, 2: composition identity fails
  Vec witness;        // in A_ij for condition 1, in A^i_{jk} coordinates for condition 2
  std::string detail;
};

struct CocycleReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  std::vector<CocycleFailure> failures;
};

CocycleReport check_cocycle(const GluingFamily& f);

// The isomorphism phi^{ij}_k : A^j_{ik} -> A^i_{jk} in the canonical quotient
// bases, or nothing when condition (1) fails for the triple.
std::optional<Mat> cocycle_isomorphism(const GluingFamily& f, std::size_t i, std::size_t j, std::size_t k);

struct CoveringFamily {
  AlgebraPtr source;
  std::vector<AlgMorphism> maps;  // surjective, domain = source
  ComodulePtr source_comodule;    // optional
  std::vector<ComodulePtr> pieces;  // optional, one per map

  CoveringFamily() = default;
  CoveringFamily(AlgebraPtr src, std::vector<AlgMorphism> ms);
  CoveringFamily(ComodulePtr src, std::vector<AlgMorphism> ms, std::vector<ComodulePtr> piece_comodules);
  std::size_t size() const { return maps.size(); }
  SubspaceFamily kernel_family() const;
};

struct CoveringReport {
  bool trivial_intersection = true;
  bool distributive = true;
  bool determined = true;
  std::size_t closure_size = 0;
  Vec intersection_witness;                         // nonzero vector in every kernel
  std::vector<IndexPair> duplicate_kernels;         // pairs of maps with equal kernels
  std::optional<std::array<Subspace, 3>> counterexample;
  bool pass() const { return trivial_intersection && distributive && determined; }
};

CoveringReport check_covering(const CoveringFamily& c, std::size_t cap = default_closure_cap);

// Coaction induced on the codomain of a colinear-compatible surjection.
// Throws Error(precondition) when ker f is not a subcomodule.
ComodulePtr induced_coaction(const ComoduleAlgebra& p, const AlgMorphism& f);

// P_ij = P / (ker pi_i + ker pi_j), pi^i_j(pi_i(p)) = [p].
GluingFamily canonical_gluing(const CoveringFamily& c);

struct IsomorphismReport {
  bool lands_in_pullback = false;
  bool bijective = false;
  bool multiplicative = false;
  Mat matrix;  // P -> total coordinates
  bool pass() const { return lands_in_pullback && bijective && multiplicative; }
};
// p -> (pi_i(p)) into the multi-pullback of the canonical gluing.
IsomorphismReport check_pullback_isomorphism(const CoveringFamily& c, const MultiPullback& m);

enum class Principality { verified, failed, unverified };
std::string to_string(Principality p);

struct PiecewiseReport {
  std::vector<bool> colinear;
  CoveringReport coinvariant_covering;
  std::vector<Principality> principality;
  bool pass() const;
};
// connections[i], when present, is a strong connection on piece i.
PiecewiseReport check_piecewise_preconditions(const CoveringFamily& c,
                                              const std::vector<std::optional<StrongConnection>>& connections,
                                              std::size_t cap = default_closure_cap);

}  // namespace hopfglue
