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

#include "hopfglue/kernels.hpp"

#include <algorithm>
#include <cstddef>

namespace hopfglue::kernels {

namespace {

using Row = Mat::Row;

const Scalar* find_entry(const Row& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Mat::Entry& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// target -= f * pivot
void subtract_scaled(Row& target, const Scalar& f, const Row& pivot) {
  Row out;
  out.reserve(target.size() + pivot.size());
  auto a = target.begin();
  auto b = pivot.begin();
  while (a != target.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -f * b->second);
      ++b;
    } else {
      Scalar v = a->second - f * b->second;
      if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

void eliminate_column(std::vector<Row>& rows, std::size_t pivot_row, std::size_t col, Mode mode) {
  const Row& p = rows[pivot_row];
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows.size());
  if (mode == Mode::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) == pivot_row) continue;
      const Scalar* f = find_entry(rows[i], col);
      if (f) {
        Scalar fc = *f;
        subtract_scaled(rows[i], fc, p);
      }
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) == pivot_row) continue;
      const Scalar* f = find_entry(rows[i], col);
      if (f) {
        Scalar fc = *f;
        subtract_scaled(rows[i], fc, p);
      }
    }
  }
}

}  // namespace

std::vector<std::size_t> rref_rows(std::vector<Row>& rows, std::size_t cols, Mode mode) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t found = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      // Rows at or below r are already cleared left of c, so a nonzero in
      // column c must be their leading entry.
      if (!rows[i].empty() && rows[i].front().first == c) {
        found = i;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[r], rows[found]);
    Scalar inv = 1 / rows[r].front().second;
    for (auto& e : rows[r]) e.second *= inv;
    eliminate_column(rows, r, c, mode);
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

namespace {

Vec times_basis_right(const std::vector<Vec>& table, std::size_t n, const Vec& x, std::size_t k) {
  // x * e_k
  Vec out(n);
  for (std::size_t l = 0; l < n; ++l)
    if (!is_zero(x[l])) out.axpy(x[l], table[l * n + k]);
  return out;
}

Vec times_basis_left(const std::vector<Vec>& table, std::size_t n, std::size_t i, const Vec& x) {
  Vec out(n);
  for (std::size_t m = 0; m < n; ++m)
    if (!is_zero(x[m])) out.axpy(x[m], table[i * n + m]);
  return out;
}

std::optional<std::array<std::size_t, 2>> assoc_row(const std::vector<Vec>& table, std::size_t n,
                                                    std::size_t i) {
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vec lhs = times_basis_right(table, n, table[i * n + j], k);
      Vec rhs = times_basis_left(table, n, i, table[j * n + k]);
      if (lhs != rhs) return std::array<std::size_t, 2>{j, k};
    }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> distrib_row(const IndexTable& join, const IndexTable& meet,
                                                      std::size_t a) {
  const std::size_t n = join.size();
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      auto lhs = meet[a][join[b][c]];
      auto rhs = join[meet[a][b]][meet[a][c]];
      if (lhs != rhs) return std::array<std::size_t, 2>{b, c};
    }
  return std::nullopt;
}

template <class RowFn>
std::optional<std::array<std::size_t, 3>> first_failure(std::size_t n, Mode mode, RowFn fn) {
  if (mode == Mode::serial) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto r = fn(i)) return std::array<std::size_t, 3>{i, (*r)[0], (*r)[1]};
    return std::nullopt;
  }
  std::vector<std::optional<std::array<std::size_t, 2>>> per(n);
  const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < sn; ++i) per[i] = fn(static_cast<std::size_t>(i));
  for (std::size_t i = 0; i < n; ++i)
    if (per[i]) return std::array<std::size_t, 3>{i, (*per[i])[0], (*per[i])[1]};
  return std::nullopt;
}

}  // namespace

std::optional<std::array<std::size_t, 3>> associativity_failure(const std::vector<Vec>& table,
                                                                std::size_t n, Mode mode) {
  return first_failure(n, mode, [&](std::size_t i) { return assoc_row(table, n, i); });
}

std::optional<std::array<std::size_t, 3>> distributivity_failure(const IndexTable& join,
                                                                 const IndexTable& meet, Mode mode) {
  return first_failure(join.size(), mode, [&](std::size_t a) { return distrib_row(join, meet, a); });
}

}  // namespace hopfglue::kernels
