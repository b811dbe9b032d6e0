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

// Brute-force pointwise model of free Z2-sets, used as an oracle.
//
// A function on Z2 x {0, ..., orbits-1} is a plain vector of values indexed by
// 2 o + s, with s = 0 at +1 and s = 1 at -1. Elements of C(Z2) (x) C(Z2)
// legs become functions of two points. Nothing here calls into the library.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Fn = std::vector<Q>;
// F(x, y) stored at x * n + y.
using Fn2 = std::vector<Q>;

inline std::size_t flip(std::size_t x) { return x ^ 1U; }

inline Fn constant(std::size_t n, const Q& c) { return Fn(n, c); }

inline Fn times(const Fn& a, const Fn& b) {
  Fn out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[x] * b[x];
  return out;
}

inline Fn minus(const Fn& a, const Fn& b) {
  Fn out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[x] - b[x];
  return out;
}

// Z2 acts by swapping the two points of each orbit; f = f_1 + f_u with
// f_1 invariant and f_u anti-invariant.
inline bool is_invariant(const Fn& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != f[flip(x)]) return false;
  return true;
}

inline bool is_anti_invariant(const Fn& f) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != -f[flip(x)]) return false;
  return true;
}

// tau on the listed orbits, zero elsewhere.
inline Fn sign_indicator(std::size_t orbits, const std::vector<std::size_t>& subset) {
  Fn f(2 * orbits, Q(0));
  for (std::size_t o : subset) {
    f[2 * o] = 1;
    f[2 * o + 1] = -1;
  }
  return f;
}

inline Fn2 outer_sum(const std::vector<std::pair<Fn, Fn>>& terms, std::size_t n) {
  Fn2 t(n * n, Q(0));
  for (const auto& [l, r] : terms)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) t[x * n + y] += l[x] * r[y];
  return t;
}

struct Verdict {
  bool unital = true, collapse = true, right_colinear = true, left_colinear = true;
  std::string first_failure;
  bool pass() const { return unital && collapse && right_colinear && left_colinear; }
};

// Axioms of a strong connection on functions on a free Z2-set, H = C(Z2) with
// basis {1, u}, u(+1) = 1, u(-1) = -1. at_one and at_u are l(1) and l(u) as
// functions of two points:
//   l(1) = 1 (x) 1,  l(u)(x, x) = 1,  l(u) odd in each variable.
inline Verdict check_axioms(const Fn2& at_one, const Fn2& at_u, std::size_t n) {
  Verdict v;
  auto note = [&](bool& flag, const std::string& what) {
    if (flag && v.first_failure.empty()) v.first_failure = what;
    flag = false;
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (at_u[x * n + x] != 1) note(v.collapse, "collapse at u");
    for (std::size_t y = 0; y < n; ++y) {
      if (at_one[x * n + y] != 1) note(v.unital, "unitality");
      if (at_u[x * n + flip(y)] != -at_u[x * n + y]) note(v.right_colinear, "right colinearity at u");
      if (at_u[flip(x) * n + y] != -at_u[x * n + y]) note(v.left_colinear, "left colinearity at u");
    }
  }
  return v;
}

// Piecewise construction for a group-like: theta_i = 1 - gamma_i^2 with
// gamma_i = alpha_i(tau_i), T_n = 1, T_i = theta_i T_{i+1}, and
// l(u) = sum_i gamma_i (x) gamma_i T_{i+1}.
struct Piecewise {
  std::vector<Fn> theta, T;  // T has one more entry than theta
  std::vector<std::pair<Fn, Fn>> terms;
};

inline Piecewise piecewise(const std::vector<Fn>& gammas) {
  const std::size_t k = gammas.size();
  const std::size_t n = gammas.front().size();
  Piecewise p;
  for (const Fn& g : gammas) p.theta.push_back(minus(constant(n, 1), times(g, g)));
  p.T.assign(k + 1, constant(n, 1));
  for (std::size_t i = k; i-- > 0;) p.T[i] = times(p.theta[i], p.T[i + 1]);
  for (std::size_t i = 0; i < k; ++i) p.terms.emplace_back(gammas[i], times(gammas[i], p.T[i + 1]));
  return p;
}

// Does f vanish on every point of the listed orbits?
inline bool vanishes_on(const Fn& f, const std::vector<std::size_t>& orbits) {
  for (std::size_t o : orbits)
    if (f[2 * o] != 0 || f[2 * o + 1] != 0) return false;
  return true;
}

}  // namespace oracle
