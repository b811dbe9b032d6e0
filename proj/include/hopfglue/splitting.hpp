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
#include <vector>

#include "hopfglue/pullback.hpp"

namespace hopfglue {

// A section of pi : A -> B defined on a subspace V of B.
struct Splitting {
  Mat pi;               // dim B x dim A
  SubspaceMap section;  // V -> A
  bool unital = false;
  bool colinear = false;
  std::optional<SubspaceFamily> respected_family;  // subspaces of A with section(pi(A_i)) inside A_i

  Splitting() = default;
  // Checks pi(section(v)) = v on every basis vector of V.
  Splitting(Mat pi, SubspaceMap section);
  Vec apply(const Vec& b) const { return section.apply(b); }
};

// Linear splitting of a surjection with section(pi(A_i)) inside A_i for every member.
Splitting subspace_respecting_splitting(const Mat& pi, const SubspaceFamily& family,
                                        std::size_t cap = default_closure_cap);

// section(1_B) = 1_A, changing the section only along the unit direction.
Splitting unitalize(const Splitting& s, const StructureAlgebra& a, const StructureAlgebra& b);
// Colinear variant: the unit correction is weighted by a colinear functional
// built from the Haar functional of H, so colinearity is kept.
Splitting unitalize(const Splitting& s, const ComoduleAlgebra& a, const ComoduleAlgebra& b);

// Splitting of pi restricted to coinvariants, respecting A_i cap A^coH. The
// section is defined on B^coH.
Splitting coinvariant_splitting(const Mat& pi, const ComoduleAlgebra& a, const ComoduleAlgebra& b,
                                const std::optional<SubspaceFamily>& family, std::size_t cap = default_closure_cap);

// b -> alpha_coinv(b<0> pi(l<1>(b<1>))) l<2>(b<1>), a colinear splitting on all of B.
Splitting colinearize(const Splitting& alpha_coinv, const StrongConnection& ell, const Mat& pi,
                      const ComoduleAlgebra& a, const ComoduleAlgebra& b,
                      const std::optional<SubspaceFamily>& family = std::nullopt);

// Splittings of the gluing maps pi^i_j, keyed by (i, j).
using SplittingTable = std::map<IndexPair, Splitting>;

struct GluingSplittings {
  SplittingTable alphas;  // respect ker pi^i_k for k != i, j
  SplittingTable betas;   // unital
};

// Colinear when the family has coactions and every component has a connection.
GluingSplittings gluing_splittings(const GluingFamily& f,
                                   const std::vector<std::optional<StrongConnection>>& connections = {},
                                   std::size_t cap = default_closure_cap);

// alpha^i_j(pi^i_j(ker pi^i_k)) inside ker pi^i_k; returns the first violating (i, j, k).
std::optional<std::array<std::size_t, 3>> find_kernel_condition_violation(const GluingFamily& f,
                                                                          const SplittingTable& alphas);

struct GlobalSplittingOptions {
  bool debug_checkpoints = false;
  std::size_t cap = default_closure_cap;
};

// Splitting of pi_i : A^pi -> A_i by the double recursion along kappa, with kappa[0] = i.
Splitting global_splitting(const MultiPullback& m, const SplittingTable& alphas, const SplittingTable& betas,
                           std::size_t i, const std::vector<std::size_t>& kappa,
                           const GlobalSplittingOptions& opts = {});

// kappa = (i, then the other indices ascending).
std::vector<std::size_t> default_order(std::size_t n, std::size_t i);

// The restriction of a map to a subspace of its domain.
SubspaceMap restrict_map(const SubspaceMap& f, const Subspace& v);

// Everything piecewise synthesis needs from a covering of P with principal pieces:
// colinear unital splittings of each pi_i transported to P and restricted to
// the comodule closure of the legs of the piece connection.
struct CoveringPipeline {
  GluingFamily gluing;
  MultiPullback pullback;
  Mat to_pullback;  // P -> pullback coordinates
  GluingSplittings splittings;
  std::vector<Splitting> global;  // per piece, into pullback coordinates
  std::vector<PieceData> pieces;
  std::vector<Mat> projections;
};

CoveringPipeline build_covering_pipeline(const CoveringFamily& c, const std::vector<StrongConnection>& connections,
                                         std::size_t cap = default_closure_cap);

}  // namespace hopfglue
