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

// Symbolic model of the real quantum sphere glued from three Toeplitz pieces.
// Noncommutative polynomials in s, s*, phi1, phi2 modulo s* s = 1, graded by
// word length mod 2, tensored with C(Z2) = span{1, u}.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfglue/exactla.hpp"
#include "json.hpp"

namespace hopfglue::freestar {

enum class Letter : std::uint8_t { s, s_star, phi1, phi2 };
using Word = std::vector<Letter>;

// Shorter words first, then lexicographic in the letter order s < s* < phi1 < phi2.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const;
};

std::string to_string(const Word& w);  // "phi2 phi2", "1" for the empty word
Word parse_word(const std::string& text);

// Positions p with w[p] = s*, w[p+1] = s.
std::vector<std::size_t> redex_positions(const Word& w);
Word rewrite_at(const Word& w, std::size_t pos);
// Normal form: no s* s factor.
Word nf(const Word& w);

class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, ShortLex>;

  NCPoly() = default;
  static NCPoly constant(const Scalar& c);
  static NCPoly monomial(const Word& w, const Scalar& c = Scalar(1));
  static NCPoly letter(Letter l) { return monomial({l}); }
  // Normalizes every word and merges coefficients.
  static NCPoly from_terms(const std::vector<std::pair<Word, Scalar>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  NCPoly even_part() const;
  NCPoly odd_part() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(NCPoly a) { return a *= Scalar(-1); }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  void add(const Word& w, const Scalar& c);
  Terms terms_;
};

NCPoly nf(const NCPoly& p);
std::string to_string(const NCPoly& p);

// one (x) 1 + with_u (x) u in T<phi> (x) C(Z2).
struct GradedTensor {
  NCPoly one, with_u;

  static GradedTensor of(NCPoly p, bool u) { return u ? GradedTensor{{}, std::move(p)} : GradedTensor{std::move(p), {}}; }
  bool is_zero() const { return one.is_zero() && with_u.is_zero(); }
  // Degree-0 and degree-1 parts of the diagonal Z2 grading.
  GradedTensor even_part() const;
  GradedTensor odd_part() const;

  GradedTensor& operator+=(const GradedTensor& o);
  GradedTensor& operator-=(const GradedTensor& o);
  friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
  friend GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
  friend GradedTensor operator*(const Scalar& c, const GradedTensor& a) { return {c * a.one, c * a.with_u}; }
  friend GradedTensor operator*(const GradedTensor& a, const GradedTensor& b);
  friend bool operator==(const GradedTensor&, const GradedTensor&) = default;
};

// Shorthands: p (x) 1 and p (x) u.
GradedTensor t1(NCPoly p);
GradedTensor tu(NCPoly p);
NCPoly phi1();
NCPoly phi2();
NCPoly one();

using SlotMask = std::uint8_t;
inline constexpr SlotMask all_slots = 0b111;

// An element of a product of copies of T<phi> (x) C(Z2), indexed by the slots in `mask`.
struct SymElem {
  SlotMask mask = all_slots;
  std::array<GradedTensor, 3> slots{};

  static SymElem zero(SlotMask m);
  static SymElem unit(SlotMask m);
  static SymElem of(std::initializer_list<GradedTensor> parts);  // all three slots
  bool active(std::size_t k) const { return (mask >> k) & 1U; }
  bool is_zero() const;
  SymElem even_part() const;
  SymElem odd_part() const;

  SymElem& operator+=(const SymElem& o);
  SymElem& operator-=(const SymElem& o);
  friend SymElem operator+(SymElem a, const SymElem& b) { return a += b; }
  friend SymElem operator-(SymElem a, const SymElem& b) { return a -= b; }
  friend SymElem operator*(const Scalar& c, const SymElem& a);
  friend SymElem operator*(const SymElem& a, const SymElem& b);
  friend bool operator==(const SymElem&, const SymElem&) = default;
};

// The same element viewed on a larger mask (missing slots are zero) or restricted to a smaller one.
SymElem embed(const SymElem& x, SlotMask m);
SymElem restrict_to(const SymElem& x, SlotMask m);
// Disjoint union of two elements.
SymElem merge(const SymElem& a, const SymElem& b);

// l(1) and l(u) as term lists.
struct SymConnection {
  SlotMask mask = all_slots;
  std::vector<std::pair<SymElem, SymElem>> at_one;
  std::vector<std::pair<SymElem, SymElem>> at_u;
};

// Commutative targets of the symbol maps tensored with C(Z2). Exponents per
// factor; Z2 factors reduce mod 2, interval factors are polynomial in t.
enum class Factor : std::uint8_t { z2, interval };
using TargetMono = std::array<std::uint32_t, 3>;
struct TargetPoly {
  std::array<Factor, 3> factors{};
  std::map<TargetMono, Scalar> terms;
  friend bool operator==(const TargetPoly&, const TargetPoly&) = default;
};

// (sigma_which (x) id)(x): sigma1 lands in C(Z2) (x) C(I), sigma2 in C(I) (x) C(Z2).
// Defined on phi words only.
TargetPoly symbol_image(int which, const GradedTensor& x);
// The three gluing constraints: sigma_a (x) id (x_a) = Phi_ab (sigma_b (x) id (x_b)).
struct Constraint {
  std::size_t a, b;
  int sigma_a, sigma_b;
  std::array<std::size_t, 3> perm;  // factor k of the result is factor perm[k] of the input
};
const std::array<Constraint, 3>& constraints();
TargetPoly apply_perm(const std::array<std::size_t, 3>& perm, const TargetPoly& p);
// Checks every constraint between two active slots.
bool in_pullback(const SymElem& x);

// Canonical y on `target` slots with rho(y) = y (x) u^degree and every constraint
// involving a target slot satisfied against the fixed slots of x. Candidates
// are phi words of length <= 2 tensored with 1 and u.
SymElem solve_transfer_symbolic(const SymElem& x, SlotMask target, int degree = 1);

// l(u) from two pieces along transfers f12: A -> B and f21: B -> A, evaluated
// on the legs of the piece connections (group-like shortcut of the gluing formula).
SymConnection glue_two_symbolic(const SymConnection& ell1, const SymConnection& ell2,
                                const std::vector<std::pair<SymElem, SymElem>>& f12,
                                const std::vector<std::pair<SymElem, SymElem>>& f21);

// l_i(u) = (1 (x) u) (x) (1 (x) u) on one slot.
SymConnection piece_connection(std::size_t slot);

struct MethodOneResult {
  SymElem a, b;            // first gluing transfers of 1 (x) u
  SymConnection ell01;     // connection on the pullback of slots 0 and 1
  SymElem a2, b2, c2;      // second gluing transfers
  SymConnection ell;
};
MethodOneResult method_one();

struct MethodTwoResult {
  std::array<SymElem, 3> gammas;
  std::array<SymElem, 3> one_minus_gamma_sq;
  SymConnection ell;
};
MethodTwoResult method_two();

// Closed-form expected outputs: the two-piece intermediate and final Method I
// connections, and the Method II connection.
SymConnection reference_method_one_partial();
SymConnection reference_method_one();
SymConnection reference_method_two();

struct SymbolicFailure {
  std::string axiom;
  std::string h;  // "1" or "u"
  std::optional<SymElem> residual;
};
struct SymbolicReport {
  bool unital = true, collapse = true, right_colinear = true, left_colinear = true;
  std::vector<SymbolicFailure> failures;
  bool pass() const { return unital && collapse && right_colinear && left_colinear; }
};
SymbolicReport verify_symbolic(const SymConnection& ell);

// sum l_i r_i at u.
SymElem leg_collapse(const SymConnection& ell);
bool legs_independent(const SymConnection& ell);

struct SymProjector {
  std::size_t size = 0;
  std::vector<std::vector<SymElem>> entries;
  bool idempotent = false;
  bool degree_zero = false;
};
// Fails with Error(precondition) on dependent legs.
SymProjector projector(const SymConnection& ell);

// Truncated shift representation on |0>, ..., |cutoff-1>.
Mat shift_matrix(std::size_t cutoff);
// R of an s, s* polynomial after normalization; phi letters have no representation.
Mat represent(const NCPoly& p, std::size_t cutoff);
NCPoly E(std::size_t n);

struct ShiftReport {
  std::size_t cutoff = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // (n, m)
  bool isometry_via_nf = false;       // R(nf(s* s)) = id
  bool isometry_below_edge = false;   // R(s*) R(s) |m> = |m> for m < cutoff - 1
  bool edge_truncated = false;        // R(s*) R(s) |cutoff-1> = 0
  bool ss_star_not_identity = false;  // R(s s*) != id
  bool pass() const {
    return failures.empty() && isometry_via_nf && isometry_below_edge && edge_truncated && ss_star_not_identity;
  }
};
// Throws Error(out_of_range) when cutoff < 4.
ShiftReport verify_En(std::size_t cutoff);

// theta / pi = q in [1/4, 9/4]; exact piecewise-linear values.
Scalar phi_hat(int which, const Scalar& q);

nlohmann::json to_json(const NCPoly& p);
nlohmann::json to_json(const SymElem& x);
nlohmann::json to_json(const SymConnection& ell);
SymConnection connection_from_json(const nlohmann::json& j);

}  // namespace hopfglue::freestar
