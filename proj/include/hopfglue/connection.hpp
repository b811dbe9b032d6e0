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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfglue/hopf.hpp"

namespace hopfglue {

struct MultiPullback;

// l: H -> P (x) P, stored as a list of (left, right) legs per H basis vector.
class StrongConnection {
 public:
  using Terms = std::vector<std::pair<Vec, Vec>>;

  StrongConnection(ComodulePtr target, std::vector<Terms> per_basis);

  const ComoduleAlgebra& target() const { return *target_; }
  const ComodulePtr& target_ptr() const { return target_; }
  const HopfAlgebra& hopf() const { return target_->hopf(); }
  const Terms& terms(std::size_t b) const { return terms_.at(b); }
  const std::vector<Terms>& all_terms() const { return terms_; }

  // l(e_b) and l(h) as vectors of P (x) P.
  Vec tensor_of(std::size_t b) const;
  Vec evaluate(const Vec& h) const;

 private:
  ComodulePtr target_;
  std::vector<Terms> terms_;
};

struct AxiomFailure {
  std::string axiom;  // "unitality", "collapse", "right-colinearity", "left-colinearity"
  std::size_t basis_index = 0;
  Vec residual;
};

struct ConnectionReport {
  bool unital = true;
  bool collapse = true;
  bool right_colinear = true;
  bool left_colinear = true;
  std::vector<AxiomFailure> failures;
  bool pass() const { return unital && collapse && right_colinear && left_colinear; }
};

// Residual conventions: unitality l(1) - 1(x)1; collapse eps(h)1 - l<1>l<2>;
// right colinearity l(h<1>) (x) h<2> - (id (x) rho) l(h);
// left colinearity S(h<1>) (x) l(h<2>) - (flip rho (x) id) l(h).
ConnectionReport verify_connection(const StrongConnection& ell);

// Synthesis input for one piece. `alpha` maps the subcomodule V of the piece
// into the total algebra P.
struct PieceData {
  ComodulePtr piece;
  StrongConnection ell;
  Subspace V;
  SubspaceMap alpha;
};

// Default V: comodule closure of the legs of ell and the unit.
Subspace default_leg_space(const StrongConnection& ell);

class Synthesis {
 public:
  // Checks co-commutativity, each piece connection, and that each alpha is a
  // unital colinear splitting of its projection on V.
  Synthesis(std::vector<PieceData> pieces, ComodulePtr total, std::vector<Mat> projections);

  std::size_t piece_count() const { return pieces_.size(); }
  Vec theta(std::size_t i, const Vec& h) const;
  Vec T(std::size_t i, const Vec& h) const;  // 0 <= i <= piece_count()
  // alpha_i(l_i<1>(h)) alpha_i(l_i<2>(h))
  Vec leg_product(std::size_t i, const Vec& h) const;
  StrongConnection connection() const;

  struct ProofReport {
    bool theta_of_unit_zero = true;
    bool T0_zero = true;
    bool projections_vanish = true;
    bool recursion = true;
    bool leg_products_coinvariant = true;
    std::vector<std::string> failures;
    bool pass() const {
      return theta_of_unit_zero && T0_zero && projections_vanish && recursion && leg_products_coinvariant;
    }
  };
  ProofReport check_proof_identities() const;

 private:
  Vec theta_basis(std::size_t i, std::size_t x) const;
  const Vec& T_basis(std::size_t i, std::size_t b) const;

  std::vector<PieceData> pieces_;
  ComodulePtr total_;
  std::vector<Mat> projections_;
  std::vector<std::vector<Vec>> theta_cache_;
  std::vector<std::vector<Vec>> T_cache_;
};

// Runs Synthesis, asserts T_0 = 0 and verify_connection on the output.
StrongConnection synthesize_piecewise(std::vector<PieceData> pieces, ComodulePtr total,
                                      std::vector<Mat> projections);

// Canonical solution y in P_dst of rho(y) = y (x) g and pi_dst(y) = pi_src(x).
Vec solve_transfer(const ComoduleAlgebra& src, const ComoduleAlgebra& dst, const Mat& pi_src,
                   const Mat& pi_dst, const Vec& x, const Vec& g);

// Unital colinear f with pi_dst o f = pi_src, assembled from solve_transfer on
// each homogeneous component. Requires H to be spanned by the given group-likes.
SubspaceMap build_transfer(const ComoduleAlgebra& src, const ComoduleAlgebra& dst, const Mat& pi_src,
                           const Mat& pi_dst, const std::vector<Vec>& grouplikes);

// Residuals of the transfer equations on every basis vector; all zero iff f is a valid transfer.
bool transfer_equations_hold(const SubspaceMap& f, const ComoduleAlgebra& src, const ComoduleAlgebra& dst,
                             const Mat& pi_src, const Mat& pi_dst);

// Glues strong connections on the two components of a fiber product.
StrongConnection glue_two(const MultiPullback& fp, const StrongConnection& ell1, const StrongConnection& ell2,
                          const SubspaceMap& f12, const SubspaceMap& f21);

// Rank factorization t = sum l_k (x) r_k with independent l's and r's.
std::pair<std::vector<Vec>, std::vector<Vec>> minimal_legs(const Vec& t, std::size_t dim);

struct ProjectorResult {
  std::size_t size = 0;
  std::vector<std::vector<Vec>> entries;  // entries[i][j] = r_i l_j
  bool idempotent = false;
  bool coinvariant = false;
  std::vector<Vec> left_legs, right_legs;
};

// Fails with Error(precondition) when either leg family is dependent.
ProjectorResult projector_from_legs(const ComoduleAlgebra& p, std::vector<Vec> left, std::vector<Vec> right);
ProjectorResult chern_galois_projector(const StrongConnection& ell, const GroupLike& g);

}  // namespace hopfglue
