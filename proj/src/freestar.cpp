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

#include "hopfglue/freestar.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "hopfglue/error.hpp"

namespace hopfglue::freestar {

namespace {

const char* letter_name(Letter l) {
  switch (l) {
    case Letter::s: return "s";
    case Letter::s_star: return "s*";
    case Letter::phi1: return "phi1";
    case Letter::phi2: return "phi2";
  }
  return "?";
}

bool is_phi(Letter l) { return l == Letter::phi1 || l == Letter::phi2; }

}  // namespace

bool ShortLex::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  bool saw_one = false;
  while (in >> tok) {
    if (tok == "s") w.push_back(Letter::s);
    else if (tok == "s*") w.push_back(Letter::s_star);
    else if (tok == "phi1") w.push_back(Letter::phi1);
    else if (tok == "phi2") w.push_back(Letter::phi2);
    else if (tok == "1") saw_one = true;
    else fail(ErrorKind::schema, "unknown letter '" + tok + "'");
  }
  if (saw_one && !w.empty()) fail(ErrorKind::schema, "'1' must stand alone in a word");
  if (!saw_one && w.empty()) fail(ErrorKind::schema, "empty word");
  return w;
}

std::vector<std::size_t> redex_positions(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == Letter::s_star && w[i + 1] == Letter::s) out.push_back(i);
  return out;
}

Word rewrite_at(const Word& w, std::size_t pos) {
  require(pos + 1 < w.size() && w[pos] == Letter::s_star && w[pos + 1] == Letter::s, ErrorKind::precondition,
          "no s* s factor at the given position");
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
  return out;
}

Word nf(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l == Letter::s && !out.empty() && out.back() == Letter::s_star) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

// ---- NCPoly ----

NCPoly NCPoly::constant(const Scalar& c) { return monomial({}, c); }

NCPoly NCPoly::monomial(const Word& w, const Scalar& c) {
  NCPoly p;
  p.add(nf(w), c);
  return p;
}

NCPoly NCPoly::from_terms(const std::vector<std::pair<Word, Scalar>>& terms) {
  NCPoly p;
  for (const auto& [w, c] : terms) p.add(nf(w), c);
  return p;
}

void NCPoly::add(const Word& w, const Scalar& c) {
  if (hopfglue::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (hopfglue::is_zero(it->second)) terms_.erase(it);
  }
}

NCPoly NCPoly::even_part() const {
  NCPoly p;
  for (const auto& [w, c] : terms_)
    if (w.size() % 2 == 0) p.terms_.emplace(w, c);
  return p;
}

NCPoly NCPoly::odd_part() const {
  NCPoly p;
  for (const auto& [w, c] : terms_)
    if (w.size() % 2 == 1) p.terms_.emplace(w, c);
  return p;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (hopfglue::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly p;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      p.add(nf(w), ca * cb);
    }
  }
  return p;
}

NCPoly nf(const NCPoly& p) {
  std::vector<std::pair<Word, Scalar>> terms(p.terms().begin(), p.terms().end());
  return NCPoly::from_terms(terms);
}

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Scalar mag = abs(c);
    if (first) out += sgn(c) < 0 ? "-" : "";
    else out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += hopfglue::to_string(mag);
    } else {
      if (mag != 1) out += hopfglue::to_string(mag) + " ";
      out += to_string(w);
    }
  }
  return out;
}

// ---- GradedTensor ----

GradedTensor GradedTensor::even_part() const { return {one.even_part(), with_u.odd_part()}; }
GradedTensor GradedTensor::odd_part() const { return {one.odd_part(), with_u.even_part()}; }

GradedTensor& GradedTensor::operator+=(const GradedTensor& o) {
  one += o.one;
  with_u += o.with_u;
  return *this;
}

GradedTensor& GradedTensor::operator-=(const GradedTensor& o) {
  one -= o.one;
  with_u -= o.with_u;
  return *this;
}

GradedTensor operator*(const GradedTensor& a, const GradedTensor& b) {
  return {a.one * b.one + a.with_u * b.with_u, a.one * b.with_u + a.with_u * b.one};
}

GradedTensor t1(NCPoly p) { return GradedTensor::of(std::move(p), false); }
GradedTensor tu(NCPoly p) { return GradedTensor::of(std::move(p), true); }
NCPoly phi1() { return NCPoly::letter(Letter::phi1); }
NCPoly phi2() { return NCPoly::letter(Letter::phi2); }
NCPoly one() { return NCPoly::constant(Scalar(1)); }

// ---- SymElem ----

SymElem SymElem::zero(SlotMask m) { return SymElem{m, {}}; }

SymElem SymElem::unit(SlotMask m) {
  SymElem x{m, {}};
  for (std::size_t k = 0; k < 3; ++k)
    if (x.active(k)) x.slots[k] = t1(freestar::one());
  return x;
}

SymElem SymElem::of(std::initializer_list<GradedTensor> parts) {
  require(parts.size() == 3, ErrorKind::dimension_mismatch, "a full element has three components");
  SymElem x{all_slots, {}};
  std::copy(parts.begin(), parts.end(), x.slots.begin());
  return x;
}

bool SymElem::is_zero() const {
  return std::all_of(slots.begin(), slots.end(), [](const GradedTensor& g) { return g.is_zero(); });
}

SymElem SymElem::even_part() const {
  SymElem x{mask, {}};
  for (std::size_t k = 0; k < 3; ++k) x.slots[k] = slots[k].even_part();
  return x;
}

SymElem SymElem::odd_part() const {
  SymElem x{mask, {}};
  for (std::size_t k = 0; k < 3; ++k) x.slots[k] = slots[k].odd_part();
  return x;
}

namespace {
void same_mask(const SymElem& a, const SymElem& b) {
  require(a.mask == b.mask, ErrorKind::dimension_mismatch, "elements live on different slot sets");
}
}  // namespace

SymElem& SymElem::operator+=(const SymElem& o) {
  same_mask(*this, o);
  for (std::size_t k = 0; k < 3; ++k) slots[k] += o.slots[k];
  return *this;
}

SymElem& SymElem::operator-=(const SymElem& o) {
  same_mask(*this, o);
  for (std::size_t k = 0; k < 3; ++k) slots[k] -= o.slots[k];
  return *this;
}

SymElem operator*(const Scalar& c, const SymElem& a) {
  SymElem x{a.mask, {}};
  for (std::size_t k = 0; k < 3; ++k) x.slots[k] = c * a.slots[k];
  return x;
}

SymElem operator*(const SymElem& a, const SymElem& b) {
  same_mask(a, b);
  SymElem x{a.mask, {}};
  for (std::size_t k = 0; k < 3; ++k) x.slots[k] = a.slots[k] * b.slots[k];
  return x;
}

SymElem embed(const SymElem& x, SlotMask m) {
  require((x.mask & ~m) == 0, ErrorKind::dimension_mismatch, "embedding into a smaller slot set");
  SymElem y = x;
  y.mask = m;
  return y;
}

SymElem restrict_to(const SymElem& x, SlotMask m) {
  require((m & ~x.mask) == 0, ErrorKind::dimension_mismatch, "restricting to slots outside the element");
  SymElem y{m, {}};
  for (std::size_t k = 0; k < 3; ++k)
    if (y.active(k)) y.slots[k] = x.slots[k];
  return y;
}

SymElem merge(const SymElem& a, const SymElem& b) {
  require((a.mask & b.mask) == 0, ErrorKind::dimension_mismatch, "merging elements with overlapping slots");
  SymElem x{static_cast<SlotMask>(a.mask | b.mask), {}};
  for (std::size_t k = 0; k < 3; ++k) x.slots[k] = a.active(k) ? a.slots[k] : b.slots[k];
  return x;
}

// ---- symbol maps and constraints ----

namespace {

std::array<Factor, 3> factors_of(int which) {
  if (which == 1) return {Factor::z2, Factor::interval, Factor::z2};
  if (which == 2) return {Factor::interval, Factor::z2, Factor::z2};
  fail(ErrorKind::out_of_range, "symbol map index must be 1 or 2");
}

void add_term(TargetPoly& p, TargetMono m, const Scalar& c) {
  for (std::size_t k = 0; k < 3; ++k)
    if (p.factors[k] == Factor::z2) m[k] %= 2;
  if (hopfglue::is_zero(c)) return;
  auto [it, inserted] = p.terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (hopfglue::is_zero(it->second)) p.terms.erase(it);
  }
}

}  // namespace

TargetPoly symbol_image(int which, const GradedTensor& x) {
  TargetPoly out;
  out.factors = factors_of(which);
  auto push = [&](const NCPoly& p, std::uint32_t h) {
    for (const auto& [w, c] : p.terms()) {
      TargetMono m{0, 0, h};
      for (Letter l : w) {
        require(is_phi(l), ErrorKind::precondition, "symbol maps are only tabulated on phi1 and phi2");
        // sigma1: phi1 -> u (x) 1, phi2 -> 1 (x) t.  sigma2: phi1 -> t (x) 1, phi2 -> 1 (x) u.
        ++m[l == Letter::phi1 ? 0 : 1];
      }
      add_term(out, m, c);
    }
  };
  push(x.one, 0);
  push(x.with_u, 1);
  return out;
}

const std::array<Constraint, 3>& constraints() {
  static const std::array<Constraint, 3> table{{
      {0, 1, 1, 1, {2, 1, 0}},  // (h, p, k) -> (k, p, h)
      {0, 2, 2, 1, {1, 2, 0}},  // (h, p, k) -> (p, k, h)
      {1, 2, 2, 2, {0, 2, 1}},  // (p, h, k) -> (p, k, h)
  }};
  return table;
}

TargetPoly apply_perm(const std::array<std::size_t, 3>& perm, const TargetPoly& p) {
  TargetPoly out;
  for (std::size_t k = 0; k < 3; ++k) out.factors[k] = p.factors[perm[k]];
  for (const auto& [m, c] : p.terms) {
    TargetMono n{};
    for (std::size_t k = 0; k < 3; ++k) n[k] = m[perm[k]];
    add_term(out, n, c);
  }
  return out;
}

namespace {

// sigma_a (x) id (x_a) - Phi (sigma_b (x) id (x_b)), scaled per side.
TargetPoly constraint_side(const Constraint& c, bool left, const GradedTensor& x) {
  return left ? symbol_image(c.sigma_a, x) : apply_perm(c.perm, symbol_image(c.sigma_b, x));
}

}  // namespace

bool in_pullback(const SymElem& x) {
  for (const Constraint& c : constraints()) {
    if (!x.active(c.a) || !x.active(c.b)) continue;
    if (!(constraint_side(c, true, x.slots[c.a]) == constraint_side(c, false, x.slots[c.b]))) return false;
  }
  return true;
}

// ---- symbolic transfer ----

namespace {

std::vector<Word> short_phi_words() {
  std::vector<Word> out{{}};
  for (Letter a : {Letter::phi1, Letter::phi2}) out.push_back({a});
  for (Letter a : {Letter::phi1, Letter::phi2})
    for (Letter b : {Letter::phi1, Letter::phi2}) out.push_back({a, b});
  return out;
}

struct Candidate {
  std::size_t slot;
  Word word;
  bool u;
};

}  // namespace

SymElem solve_transfer_symbolic(const SymElem& x, SlotMask target, int degree) {
  require((x.mask & target) == 0, ErrorKind::precondition, "transfer target overlaps the source slots");
  require(degree == 0 || degree == 1, ErrorKind::out_of_range, "degree must be 0 or 1");
  const SlotMask all = x.mask | target;
  auto is_target = [&](std::size_t k) { return ((target >> k) & 1U) != 0; };

  // Homogeneous candidates only, so colinearity of the solution is built in.
  std::vector<Candidate> cands;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!is_target(k)) continue;
    for (const Word& w : short_phi_words())
      for (bool u : {false, true})
        if ((w.size() + (u ? 1 : 0)) % 2 == static_cast<std::size_t>(degree)) cands.push_back({k, w, u});
  }

  // One row per (constraint, target monomial).
  std::map<std::pair<std::size_t, TargetMono>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  std::vector<Scalar> rhs;
  auto row_index = [&](std::size_t ci, const TargetMono& m) {
    auto [it, inserted] = row_of.try_emplace({ci, m}, rows.size());
    if (inserted) {
      rows.emplace_back();
      rhs.emplace_back(0);
    }
    return it->second;
  };

  const auto& cs = constraints();
  for (std::size_t ci = 0; ci < cs.size(); ++ci) {
    const Constraint& c = cs[ci];
    if (((all >> c.a) & 1U) == 0 || ((all >> c.b) & 1U) == 0) continue;
    if (!is_target(c.a) && !is_target(c.b)) continue;
    for (bool left : {true, false}) {
      const std::size_t slot = left ? c.a : c.b;
      const Scalar sign = left ? Scalar(1) : Scalar(-1);
      if (is_target(slot)) {
        for (std::size_t j = 0; j < cands.size(); ++j) {
          if (cands[j].slot != slot) continue;
          TargetPoly img = constraint_side(c, left, GradedTensor::of(NCPoly::monomial(cands[j].word), cands[j].u));
          for (const auto& [m, v] : img.terms) rows[row_index(ci, m)].emplace_back(j, sign * v);
        }
      } else {
        TargetPoly img = constraint_side(c, left, x.slots[slot]);
        for (const auto& [m, v] : img.terms) rhs[row_index(ci, m)] -= sign * v;
      }
    }
  }

  Mat a(rows.size(), cands.size());
  Vec b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [j, v] : rows[r]) a.set(r, j, a.at(r, j) + v);
    b[r] = rhs[r];
  }
  std::optional<Vec> sol = solve(a, b);
  if (!sol) fail(ErrorKind::inconsistent, "no transfer of the requested degree satisfies the gluing constraints");

  SymElem y = SymElem::zero(target);
  for (std::size_t j = 0; j < cands.size(); ++j) {
    if (hopfglue::is_zero((*sol)[j])) continue;
    y.slots[cands[j].slot] += GradedTensor::of(NCPoly::monomial(cands[j].word, (*sol)[j]), cands[j].u);
  }
  return y;
}

// ---- gluing ----

namespace {

using TermList = std::vector<std::pair<SymElem, SymElem>>;

SymElem apply_table(const TermList& f, const SymElem& x, SlotMask codomain) {
  if (x == SymElem::unit(x.mask)) return SymElem::unit(codomain);
  for (const auto& [k, v] : f) {
    if (k == x) {
      require(v.mask == codomain, ErrorKind::dimension_mismatch, "transfer value on the wrong slots");
      return v;
    }
  }
  fail(ErrorKind::precondition, "transfer map is not tabulated on a leg of the piece connection");
}

TermList glue_at(const TermList& l1, const TermList& l2, SlotMask m1, SlotMask m2, const TermList& f12,
                 const TermList& f21) {
  const SlotMask m = m1 | m2;
  TermList out;
  SymElem k = SymElem::unit(m2);
  for (const auto& [l, r] : l1) {
    SymElem fl = apply_table(f12, l, m2);
    SymElem fr = apply_table(f12, r, m2);
    k -= fl * fr;
    out.emplace_back(merge(l, fl), merge(r, fr));
  }
  for (const auto& [l, r] : l2) {
    SymElem left = embed(k * l, m);
    if (left.is_zero()) continue;
    out.emplace_back(std::move(left), merge(apply_table(f21, r, m1), r));
  }
  return out;
}

}  // namespace

SymConnection glue_two_symbolic(const SymConnection& ell1, const SymConnection& ell2, const TermList& f12,
                                const TermList& f21) {
  require((ell1.mask & ell2.mask) == 0, ErrorKind::precondition, "pieces must occupy disjoint slots");
  for (const auto& [x, y] : f12)
    require(x.mask == ell1.mask && y.mask == ell2.mask && in_pullback(merge(x, y)), ErrorKind::precondition,
            "transfer maps fail the gluing equations");
  for (const auto& [x, y] : f21)
    require(x.mask == ell2.mask && y.mask == ell1.mask && in_pullback(merge(x, y)), ErrorKind::precondition,
            "transfer maps fail the gluing equations");
  SymConnection out;
  out.mask = ell1.mask | ell2.mask;
  out.at_one = glue_at(ell1.at_one, ell2.at_one, ell1.mask, ell2.mask, f12, f21);
  out.at_u = glue_at(ell1.at_u, ell2.at_u, ell1.mask, ell2.mask, f12, f21);
  return out;
}

SymConnection piece_connection(std::size_t slot) {
  require(slot < 3, ErrorKind::out_of_range, "slot index out of range");
  const auto m = static_cast<SlotMask>(1U << slot);
  SymElem u = SymElem::zero(m);
  u.slots[slot] = tu(one());
  SymConnection ell;
  ell.mask = m;
  ell.at_one = {{SymElem::unit(m), SymElem::unit(m)}};
  ell.at_u = {{u, u}};
  return ell;
}

namespace {

// Transfer table on the distinct legs of `ell` that the gluing formula
// evaluates: both legs of the first piece, right legs only of the second.
TermList transfer_table(const SymConnection& ell, SlotMask target, bool with_left) {
  TermList out;
  for (const auto* list : {&ell.at_one, &ell.at_u}) {
    for (const auto& [l, r] : *list) {
      for (const SymElem* x : {&l, &r}) {
        if ((x == &l && !with_left) || *x == SymElem::unit(x->mask)) continue;
        bool seen = std::any_of(out.begin(), out.end(), [&](const auto& kv) { return kv.first == *x; });
        if (seen) continue;
        const int degree = x->odd_part().is_zero() ? 0 : 1;
        out.emplace_back(*x, solve_transfer_symbolic(*x, target, degree));
      }
    }
  }
  return out;
}

SymElem lookup(const TermList& t, const SymElem& x) {
  for (const auto& [k, v] : t)
    if (k == x) return v;
  fail(ErrorKind::precondition, "leg missing from transfer table");
}

}  // namespace

MethodOneResult method_one() {
  MethodOneResult res;
  const SymConnection ell0 = piece_connection(0);
  const SymConnection ell1 = piece_connection(1);
  const SymConnection ell2 = piece_connection(2);

  TermList f01 = transfer_table(ell0, 0b010, true);
  TermList f10 = transfer_table(ell1, 0b001, false);
  res.a = lookup(f01, ell0.at_u.front().first);
  res.b = lookup(f10, ell1.at_u.front().first);
  res.ell01 = glue_two_symbolic(ell0, ell1, f01, f10);

  TermList f2 = transfer_table(ell2, 0b011, true);
  TermList f01_2 = transfer_table(res.ell01, 0b100, false);
  res.a2 = lookup(f2, ell2.at_u.front().first);
  res.b2 = lookup(f01_2, res.ell01.at_u.at(0).second);
  res.c2 = lookup(f01_2, res.ell01.at_u.at(1).second);
  res.ell = glue_two_symbolic(ell2, res.ell01, f2, f01_2);
  return res;
}

MethodTwoResult method_two() {
  MethodTwoResult res;
  const SymElem unit = SymElem::unit(all_slots);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto m = static_cast<SlotMask>(1U << i);
    SymElem u = SymElem::zero(m);
    u.slots[i] = tu(one());
    res.gammas[i] = merge(u, solve_transfer_symbolic(u, all_slots & ~m, 1));
    // theta_i(u) with l_i(u) = u (x) u.
    res.one_minus_gamma_sq[i] = unit - res.gammas[i] * res.gammas[i];
  }
  res.ell.mask = all_slots;
  res.ell.at_one = {{unit, unit}};
  // T_3(u) = 1, T_i(u) = theta_i(u) T_{i+1}(u) for a group-like u.
  std::array<SymElem, 4> T;
  T[3] = unit;
  for (std::size_t i = 3; i-- > 0;) T[i] = res.one_minus_gamma_sq[i] * T[i + 1];
  for (std::size_t i = 0; i < 3; ++i) {
    SymElem right = res.gammas[i] * T[i + 1];
    if (right.is_zero()) continue;
    res.ell.at_u.emplace_back(res.gammas[i], right);
  }
  return res;
}

// ---- reference formulas ----

namespace {

NCPoly one_minus_sq(const NCPoly& p) { return one() - p * p; }

SymConnection full_connection(TermList at_u) {
  SymConnection ell;
  ell.mask = all_slots;
  ell.at_one = {{SymElem::unit(all_slots), SymElem::unit(all_slots)}};
  ell.at_u = std::move(at_u);
  return ell;
}

}  // namespace

SymConnection reference_method_one_partial() {
  SymElem l1{0b011, {tu(one()), t1(phi1()), {}}};
  SymElem l2{0b011, {GradedTensor{}, tu(one_minus_sq(phi1())), {}}};
  SymElem r2{0b011, {t1(phi1()), tu(one()), {}}};
  SymConnection ell;
  ell.mask = 0b011;
  ell.at_one = {{SymElem::unit(0b011), SymElem::unit(0b011)}};
  ell.at_u = {{l1, l1}, {l2, r2}};
  return ell;
}

SymConnection reference_method_one() {
  const NCPoly a = one_minus_sq(phi2());
  const NCPoly b = one_minus_sq(phi1());
  SymElem l1 = SymElem::of({t1(phi2()), t1(phi2()), tu(one())});
  SymElem l2 = SymElem::of({tu(a), t1(a * phi1()), {}});
  SymElem r2 = SymElem::of({tu(one()), t1(phi1()), t1(phi1())});
  SymElem l3 = SymElem::of({{}, tu(a * b), {}});
  SymElem r3 = SymElem::of({t1(phi1()), tu(one()), t1(phi2())});
  return full_connection({{l1, l1}, {l2, r2}, {l3, r3}});
}

SymConnection reference_method_two() {
  const NCPoly a = one_minus_sq(phi2());
  const NCPoly b = one_minus_sq(phi1());
  SymElem g0 = SymElem::of({tu(one()), t1(phi1()), t1(phi1())});
  SymElem g1 = SymElem::of({t1(phi1()), tu(one()), t1(phi2())});
  SymElem g2 = SymElem::of({t1(phi2()), t1(phi2()), tu(one())});
  SymElem r0 = SymElem::of({tu(b * a), {}, {}});
  SymElem r1 = SymElem::of({t1(phi1() * a), tu(a), {}});
  return full_connection({{g0, r0}, {g1, r1}, {g2, g2}});
}

// ---- verification ----

namespace {

// (slot, u?, word) coordinates of one leg.
using LegKey = std::tuple<std::size_t, int, Word>;
using TensorKey = std::pair<LegKey, LegKey>;
using Tensor = std::map<TensorKey, Scalar>;

std::vector<std::pair<LegKey, Scalar>> coords(const SymElem& x) {
  std::vector<std::pair<LegKey, Scalar>> out;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!x.active(k)) continue;
    for (const auto& [w, c] : x.slots[k].one.terms()) out.push_back({{k, 0, w}, c});
    for (const auto& [w, c] : x.slots[k].with_u.terms()) out.push_back({{k, 1, w}, c});
  }
  return out;
}

template <class F, class G>
Tensor tensor_of(const TermList& terms, F&& fl, G&& fr) {
  Tensor t;
  for (const auto& [l, r] : terms) {
    auto cl = coords(fl(l));
    auto cr = coords(fr(r));
    for (const auto& [kl, vl] : cl) {
      for (const auto& [kr, vr] : cr) {
        auto [it, inserted] = t.try_emplace({kl, kr}, vl * vr);
        if (!inserted) {
          it->second += vl * vr;
          if (hopfglue::is_zero(it->second)) t.erase(it);
        }
      }
    }
  }
  return t;
}

const auto ident = [](const SymElem& x) { return x; };
const auto even = [](const SymElem& x) { return x.even_part(); };
const auto odd = [](const SymElem& x) { return x.odd_part(); };

SymElem collapse_of(const TermList& terms, SlotMask m) {
  SymElem acc = SymElem::zero(m);
  for (const auto& [l, r] : terms) acc += l * r;
  return acc;
}

}  // namespace

SymElem leg_collapse(const SymConnection& ell) { return collapse_of(ell.at_u, ell.mask); }

SymbolicReport verify_symbolic(const SymConnection& ell) {
  SymbolicReport rep;
  const SymElem unit = SymElem::unit(ell.mask);
  for (const auto* list : {&ell.at_one, &ell.at_u})
    for (const auto& [l, r] : *list)
      require(l.mask == ell.mask && r.mask == ell.mask, ErrorKind::dimension_mismatch,
              "connection leg on the wrong slots");

  if (tensor_of(ell.at_one, ident, ident) != tensor_of(TermList{{unit, unit}}, ident, ident)) {
    rep.unital = false;
    rep.failures.push_back({"unital", "1", std::nullopt});
  }
  // epsilon(1) = epsilon(u) = 1.
  for (const auto& [h, list] : {std::pair{"1", &ell.at_one}, std::pair{"u", &ell.at_u}}) {
    SymElem residual = collapse_of(*list, ell.mask) - unit;
    if (!residual.is_zero()) {
      rep.collapse = false;
      rep.failures.push_back({"collapse", h, residual});
    }
  }
  // Right: sum l (x) rho(r) = l(h) (x) h. Left: sum rho(l) (x) r = h (x) l(h).
  if (!tensor_of(ell.at_one, ident, odd).empty()) {
    rep.right_colinear = false;
    rep.failures.push_back({"right_colinear", "1", std::nullopt});
  }
  if (!tensor_of(ell.at_u, ident, even).empty()) {
    rep.right_colinear = false;
    rep.failures.push_back({"right_colinear", "u", std::nullopt});
  }
  if (!tensor_of(ell.at_one, odd, ident).empty()) {
    rep.left_colinear = false;
    rep.failures.push_back({"left_colinear", "1", std::nullopt});
  }
  if (!tensor_of(ell.at_u, even, ident).empty()) {
    rep.left_colinear = false;
    rep.failures.push_back({"left_colinear", "u", std::nullopt});
  }
  return rep;
}

namespace {

bool independent(const std::vector<SymElem>& legs) {
  std::map<LegKey, std::size_t> index;
  for (const SymElem& x : legs)
    for (const auto& [k, c] : coords(x)) index.try_emplace(k, index.size());
  IndependentSet set(index.size());
  for (const SymElem& x : legs) {
    Vec v(index.size());
    for (const auto& [k, c] : coords(x)) v[index.at(k)] = c;
    if (!set.try_add(v)) return false;
  }
  return true;
}

}  // namespace

bool legs_independent(const SymConnection& ell) {
  std::vector<SymElem> left, right;
  for (const auto& [l, r] : ell.at_u) {
    left.push_back(l);
    right.push_back(r);
  }
  return independent(left) && independent(right);
}

SymProjector projector(const SymConnection& ell) {
  if (!legs_independent(ell)) fail(ErrorKind::precondition, "dependent legs");
  SymProjector p;
  const auto& t = ell.at_u;
  p.size = t.size();
  p.entries.assign(p.size, std::vector<SymElem>(p.size));
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t j = 0; j < p.size; ++j) p.entries[i][j] = t[i].second * t[j].first;

  p.idempotent = true;
  p.degree_zero = true;
  for (std::size_t i = 0; i < p.size; ++i) {
    for (std::size_t j = 0; j < p.size; ++j) {
      SymElem sq = SymElem::zero(ell.mask);
      for (std::size_t k = 0; k < p.size; ++k) sq += p.entries[i][k] * p.entries[k][j];
      if (!(sq == p.entries[i][j])) p.idempotent = false;
      if (!p.entries[i][j].odd_part().is_zero()) p.degree_zero = false;
    }
  }
  return p;
}

// ---- shift representation ----

Mat shift_matrix(std::size_t cutoff) {
  Mat m(cutoff, cutoff);
  for (std::size_t i = 0; i + 1 < cutoff; ++i) m.set(i + 1, i, Scalar(1));
  return m;
}

Mat represent(const NCPoly& p, std::size_t cutoff) {
  const Mat s = shift_matrix(cutoff);
  const Mat s_star = s.transpose();
  Mat out(cutoff, cutoff);
  for (const auto& [w, c] : p.terms()) {
    Mat term = Mat::identity(cutoff);
    for (Letter l : w) {
      require(!is_phi(l), ErrorKind::precondition, "phi letters have no shift representation");
      term = term * (l == Letter::s ? s : s_star);
    }
    out = out + c * term;
  }
  return out;
}

NCPoly E(std::size_t n) {
  auto proj = [](std::size_t k) {
    Word w(k, Letter::s);
    w.insert(w.end(), k, Letter::s_star);
    return NCPoly::monomial(w);
  };
  return NCPoly::letter(Letter::s) * (proj(n) - proj(n + 2));
}

ShiftReport verify_En(std::size_t cutoff) {
  require(cutoff >= 4, ErrorKind::out_of_range, "cutoff must be at least 4");
  ShiftReport rep;
  rep.cutoff = cutoff;
  for (std::size_t n = 0; n + 2 < cutoff; ++n) {
    const NCPoly e = E(n);
    const Mat r = represent(e * e, cutoff);
    for (std::size_t m = 0; m < cutoff; ++m) {
      ++rep.pairs_checked;
      Vec expected(cutoff);
      if (m == n) expected[n + 2] = 1;
      if (r.col_vec(m) != expected) rep.failures.emplace_back(n, m);
    }
  }
  const Mat id = Mat::identity(cutoff);
  const NCPoly s = NCPoly::letter(Letter::s);
  const NCPoly s_star = NCPoly::letter(Letter::s_star);
  rep.isometry_via_nf = represent(s_star * s, cutoff) == id;
  const Mat raw = shift_matrix(cutoff).transpose() * shift_matrix(cutoff);
  rep.isometry_below_edge = true;
  for (std::size_t m = 0; m + 1 < cutoff; ++m)
    if (raw.col_vec(m) != Vec::unit(cutoff, m)) rep.isometry_below_edge = false;
  rep.edge_truncated = raw.col_vec(cutoff - 1).is_zero();
  rep.ss_star_not_identity = represent(s * s_star, cutoff) != id;
  return rep;
}

Scalar phi_hat(int which, const Scalar& q) {
  require(which == 1 || which == 2, ErrorKind::out_of_range, "phi_hat index must be 1 or 2");
  const Scalar lo(1, 4), hi(9, 4);
  require(q >= lo && q <= hi, ErrorKind::out_of_range, "angle outside [pi/4, 9pi/4]");
  const Scalar four(4);
  if (which == 1) {
    if (q <= Scalar(3, 4)) return Scalar(2) - four * q;
    if (q <= Scalar(5, 4)) return Scalar(-1);
    if (q <= Scalar(7, 4)) return four * q - Scalar(6);
    return Scalar(1);
  }
  if (q <= Scalar(3, 4)) return Scalar(1);
  if (q <= Scalar(5, 4)) return Scalar(4) - four * q;
  if (q <= Scalar(7, 4)) return Scalar(-1);
  return four * q - Scalar(8);
}

// ---- serialization ----

nlohmann::json to_json(const NCPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back({{"word", to_string(w)}, {"coeff", hopfglue::to_string(c)}});
  return {{"terms", terms}};
}

nlohmann::json to_json(const SymElem& x) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < 3; ++k) {
    if (!x.active(k)) continue;
    out.push_back({{"slot", k}, {"1", to_json(x.slots[k].one)}, {"u", to_json(x.slots[k].with_u)}});
  }
  return out;
}

nlohmann::json to_json(const SymConnection& ell) {
  auto list = [](const TermList& t) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& [l, r] : t) a.push_back({{"left", to_json(l)}, {"right", to_json(r)}});
    return a;
  };
  nlohmann::json slots = nlohmann::json::array();
  for (std::size_t k = 0; k < 3; ++k)
    if ((ell.mask >> k) & 1U) slots.push_back(k);
  return {{"slots", slots}, {"at_one", list(ell.at_one)}, {"at_u", list(ell.at_u)}};
}

namespace {

NCPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(ErrorKind::schema, "polynomial must be an object with a terms array");
  std::vector<std::pair<Word, Scalar>> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("word") || !t.contains("coeff") || !t["word"].is_string() ||
        !t["coeff"].is_string())
      fail(ErrorKind::schema, "polynomial term needs string word and coeff");
    terms.emplace_back(parse_word(t["word"].get<std::string>()), parse_scalar(t["coeff"].get<std::string>()));
  }
  return NCPoly::from_terms(terms);
}

SymElem elem_from_json(const nlohmann::json& j, SlotMask mask) {
  if (!j.is_array()) fail(ErrorKind::schema, "element must be an array of slots");
  SymElem x = SymElem::zero(mask);
  SlotMask seen = 0;
  for (const auto& s : j) {
    if (!s.is_object() || !s.contains("slot") || !s["slot"].is_number_unsigned())
      fail(ErrorKind::schema, "slot entry needs an unsigned slot index");
    const auto k = s["slot"].get<std::size_t>();
    if (k >= 3 || !x.active(k) || ((seen >> k) & 1U)) fail(ErrorKind::schema, "invalid or repeated slot index");
    seen |= static_cast<SlotMask>(1U << k);
    if (!s.contains("1") || !s.contains("u")) fail(ErrorKind::schema, "slot entry needs parts 1 and u");
    x.slots[k] = {poly_from_json(s["1"]), poly_from_json(s["u"])};
  }
  if (seen != mask) fail(ErrorKind::schema, "element does not cover every slot of the connection");
  return x;
}

}  // namespace

SymConnection connection_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("slots") || !j.contains("at_one") || !j.contains("at_u"))
    fail(ErrorKind::schema, "connection needs slots, at_one and at_u");
  SymConnection ell;
  ell.mask = 0;
  for (const auto& k : j["slots"]) {
    if (!k.is_number_unsigned() || k.get<std::size_t>() >= 3) fail(ErrorKind::schema, "invalid slot index");
    ell.mask |= static_cast<SlotMask>(1U << k.get<std::size_t>());
  }
  for (const auto& [key, dst] : {std::pair{"at_one", &ell.at_one}, std::pair{"at_u", &ell.at_u}}) {
    if (!j[key].is_array()) fail(ErrorKind::schema, std::string(key) + " must be an array");
    for (const auto& t : j[key]) {
      if (!t.is_object() || !t.contains("left") || !t.contains("right"))
        fail(ErrorKind::schema, "connection term needs left and right");
      dst->emplace_back(elem_from_json(t["left"], ell.mask), elem_from_json(t["right"], ell.mask));
    }
  }
  return ell;
}

}  // namespace hopfglue::freestar
