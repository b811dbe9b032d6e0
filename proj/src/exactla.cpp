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

#include "hopfglue/exactla.hpp"

#include <algorithm>
#include <string>

#include "hopfglue/kernels.hpp"

namespace hopfglue {

namespace {

void check_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    fail(ErrorKind::dimension_mismatch,
         std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

Mat::Row compress(const Vec& v) {
  Mat::Row row;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!hopfglue::is_zero(v[i])) row.emplace_back(i, v[i]);
  return row;
}

}  // namespace

// ---------------------------------------------------------------- Vec

Vec Vec::unit(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

std::size_t Vec::leading_index() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (sgn(entries_[i]) != 0) return i;
  return entries_.size();
}

Vec& Vec::operator+=(const Vec& o) {
  check_dims(dim(), o.dim(), "vector addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  check_dims(dim(), o.dim(), "vector subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

Vec& Vec::axpy(const Scalar& c, const Vec& o) {
  check_dims(dim(), o.dim(), "axpy");
  if (hopfglue::is_zero(c)) return *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (sgn(o.entries_[i]) != 0) entries_[i] += c * o.entries_[i];
  return *this;
}

std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Scalar dot(const Vec& a, const Vec& b) {
  check_dims(a.dim(), b.dim(), "dot");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.dim(); ++i) out[a.dim() + i] = b[i];
  return out;
}

// ---------------------------------------------------------------- Mat

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Scalar(1));
  return m;
}

Mat Mat::dense(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Mat m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    check_dims(row.size(), cols, "ragged dense matrix");
    m.set_row(r++, Vec(row));
  }
  return m;
}

Mat Mat::from_rows(std::size_t cols, std::span<const Vec> rows) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Mat Mat::from_columns(std::size_t rows, std::span<const Vec> cols) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    check_dims(cols[c].dim(), rows, "column length");
    for (std::size_t r = 0; r < rows; ++r)
      if (!hopfglue::is_zero(cols[c][r])) m.data_[r].emplace_back(c, cols[c][r]);
  }
  return m;
}

std::size_t Mat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar Mat::at(std::size_t r, std::size_t c) const {
  const Row& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it == row.end() || it->first != c) return Scalar(0);
  return it->second;
}

void Mat::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (c >= cols_) fail(ErrorKind::out_of_range, "matrix column index out of range");
  Row& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (hopfglue::is_zero(v))
      row.erase(it);
    else
      it->second = v;
  } else if (!hopfglue::is_zero(v)) {
    row.insert(it, Entry(c, v));
  }
}

void Mat::set_row(std::size_t r, const Vec& v) {
  check_dims(v.dim(), cols_, "row length");
  data_.at(r) = compress(v);
}

void Mat::set_column(std::size_t c, const Vec& v) {
  check_dims(v.dim(), rows(), "column length");
  for (std::size_t r = 0; r < rows(); ++r) set(r, c, v[r]);
}

Vec Mat::row_vec(std::size_t r) const {
  Vec v(cols_);
  for (const auto& [c, x] : data_.at(r)) v[c] = x;
  return v;
}

Vec Mat::col_vec(std::size_t c) const {
  Vec v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v[r] = at(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, x] : data_[r]) t.data_[c].emplace_back(r, x);
  return t;
}

Mat Mat::vstack(const Mat& below) const {
  check_dims(cols_, below.cols_, "vstack");
  Mat m = *this;
  m.data_.insert(m.data_.end(), below.data_.begin(), below.data_.end());
  return m;
}

Mat Mat::hstack(const Mat& right) const {
  check_dims(rows(), right.rows(), "hstack");
  Mat m(rows(), cols_ + right.cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    m.data_[r] = data_[r];
    for (const auto& [c, x] : right.data_[r]) m.data_[r].emplace_back(cols_ + c, x);
  }
  return m;
}

Mat Mat::row_block(std::size_t r0, std::size_t r1) const {
  if (r0 > r1 || r1 > rows()) fail(ErrorKind::out_of_range, "row block out of range");
  Mat m(r1 - r0, cols_);
  for (std::size_t r = r0; r < r1; ++r) m.data_[r - r0] = data_[r];
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  check_dims(cols_, v.dim(), "matrix-vector product");
  Vec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    Scalar s = 0;
    for (const auto& [c, x] : data_[r]) s += x * v[c];
    out[r] = s;
  }
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  check_dims(cols_, o.rows(), "matrix product");
  Mat out(rows(), o.cols_);
  std::vector<Scalar> acc(o.cols_);
  std::vector<char> touched(o.cols_, 0);
  std::vector<std::size_t> cols_used;
  for (std::size_t r = 0; r < rows(); ++r) {
    cols_used.clear();
    for (const auto& [k, x] : data_[r])
      for (const auto& [c, y] : o.data_[k]) {
        if (!touched[c]) {
          touched[c] = 1;
          acc[c] = 0;
          cols_used.push_back(c);
        }
        acc[c] += x * y;
      }
    std::sort(cols_used.begin(), cols_used.end());
    for (std::size_t c : cols_used) {
      touched[c] = 0;
      if (!hopfglue::is_zero(acc[c])) out.data_[r].emplace_back(c, acc[c]);
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  check_dims(rows(), o.rows(), "matrix sum rows");
  check_dims(cols_, o.cols_, "matrix sum cols");
  Mat out(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    Vec v = row_vec(r) + o.row_vec(r);
    out.data_[r] = compress(v);
  }
  return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + Scalar(-1) * o; }

Mat operator*(const Scalar& c, const Mat& m) {
  Mat out(m.rows(), m.cols());
  if (hopfglue::is_zero(c)) return out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [col, x] : m.data_[r]) out.data_[r].emplace_back(col, c * x);
  return out;
}

// ---------------------------------------------------------------- RREF

RrefResult rref_full(const Mat& m) {
  Mat work = m;
  auto pivots = kernels::rref_rows(work.mutable_rows(), m.cols(), kernels::Mode::parallel);
  return {std::move(work), std::move(pivots)};
}

Mat rref(const Mat& m) {
  RrefResult r = rref_full(m);
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < r.reduced.rows(); ++i) out.mutable_rows()[i] = r.reduced.row(i);
  return out;
}

std::size_t rank(const Mat& m) { return rref_full(m).pivots.size(); }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.push_back(Vec::unit(n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::row_space(const Mat& m) {
  RrefResult r = rref_full(m);
  Subspace s(m.cols());
  for (std::size_t i = 0; i < r.reduced.rows(); ++i) s.basis_.push_back(r.reduced.row_vec(i));
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(std::size_t n, std::span<const Vec> vectors) {
  for (const auto& v : vectors) check_dims(v.dim(), n, "spanning vector");
  return row_space(Mat::from_rows(n, vectors));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  check_dims(v.dim(), ambient_, "subspace membership");
  Vec coords(dim());
  Vec recon(ambient_);
  for (std::size_t k = 0; k < dim(); ++k) {
    coords[k] = v[pivots_[k]];
    recon.axpy(coords[k], basis_[k]);
  }
  if (recon != v) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  check_dims(other.ambient_, ambient_, "subspace containment");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

Mat Subspace::basis_matrix() const { return Mat::from_columns(ambient_, basis_); }

Mat Subspace::coordinate_matrix() const {
  Mat m(dim(), ambient_);
  for (std::size_t k = 0; k < dim(); ++k) m.set(k, pivots_[k], Scalar(1));
  return m;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (auto c = a.basis_[i] <=> b.basis_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_dims(a.ambient_dim(), b.ambient_dim(), "subspace sum");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_dims(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
  // x = A y = B z  <=>  [A | -B] (y, z) = 0; the intersection is A applied to the y-parts.
  Mat combined = a.basis_matrix().hstack(Scalar(-1) * b.basis_matrix());
  Subspace k = kernel(combined);
  Mat A = a.basis_matrix();
  std::vector<Vec> out;
  for (const auto& w : k.basis()) {
    Vec y(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) y[i] = w[i];
    out.push_back(A * y);
  }
  return Subspace::span(a.ambient_dim(), out);
}

Subspace kernel(const Mat& m) {
  RrefResult r = rref_full(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = -r.reduced.at(k, f);
    basis.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace image(const Mat& m) { return Subspace::row_space(m.transpose()); }

Subspace image(const Mat& m, const Subspace& domain) {
  check_dims(m.cols(), domain.ambient_dim(), "image domain");
  return image(m * domain.basis_matrix());
}

std::optional<Vec> solve(const Mat& m, const Vec& v) {
  check_dims(v.dim(), m.rows(), "solve right-hand side");
  Mat aug(m.rows(), 1);
  aug.set_column(0, v);
  RrefResult r = rref_full(m.hstack(aug));
  Vec x(m.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] == m.cols()) return std::nullopt;
    x[r.pivots[k]] = r.reduced.at(k, m.cols());
  }
  return x;
}

Subspace complement_in(const Subspace& sub, const Subspace& within) {
  if (!within.contains(sub)) fail(ErrorKind::precondition, "complement_in: sub is not contained in within");
  IndependentSet acc(within.ambient_dim());
  for (const auto& v : sub.basis()) acc.try_add(v);
  std::vector<Vec> kept;
  for (const auto& v : within.basis())
    if (acc.try_add(v)) kept.push_back(v);
  return Subspace::span(within.ambient_dim(), kept);
}

std::optional<Mat> inverse(const Mat& m) {
  check_dims(m.rows(), m.cols(), "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Mat(0, 0);
  RrefResult r = rref_full(m.hstack(Mat::identity(n)));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [c, x] : r.reduced.row(i))
      if (c >= n) inv.set(i, c - n, x);
  return inv;
}

Subspace preimage(const Mat& m, const Subspace& target) {
  check_dims(m.rows(), target.ambient_dim(), "preimage target");
  // x with m x in target: m x = T y  <=>  [m | -T] (x, y) = 0.
  Mat combined = m.hstack(Scalar(-1) * target.basis_matrix());
  Subspace k = kernel(combined);
  std::vector<Vec> out;
  for (const auto& w : k.basis()) {
    Vec x(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) x[i] = w[i];
    out.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), out);
}

LinearQuotient linear_quotient(const Subspace& killed) {
  const std::size_t n = killed.ambient_dim();
  LinearQuotient q;
  q.killed = killed;
  q.representatives = complement_in(killed, Subspace::full(n));
  auto inv = inverse(q.representatives.basis_matrix().hstack(killed.basis_matrix()));
  if (!inv) fail(ErrorKind::invalid_structure, "complement does not complete the subspace to a basis");
  q.projection = inv->row_block(0, q.representatives.dim());
  q.section = q.representatives.basis_matrix();
  return q;
}

// ---------------------------------------------------------------- IndependentSet

Vec IndependentSet::reduce(Vec v) const {
  check_dims(v.dim(), ambient_, "independent set");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar f = v[pivots_[k]];
    if (!hopfglue::is_zero(f)) v.axpy(-f, rows_[k]);
  }
  return v;
}

bool IndependentSet::is_independent(const Vec& v) const { return !reduce(v).is_zero(); }

bool IndependentSet::try_add(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = r.leading_index();
  if (p == r.dim()) return false;
  r *= 1 / r[p];
  for (auto& row : rows_) {
    Scalar f = row[p];
    if (!hopfglue::is_zero(f)) row.axpy(-f, r);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

// ---------------------------------------------------------------- SubspaceMap

SubspaceMap::SubspaceMap(Subspace domain, std::size_t codomain_dim, Mat images)
    : domain_(std::move(domain)), codomain_(codomain_dim), images_(std::move(images)) {
  check_dims(images_.rows(), codomain_, "subspace map codomain");
  check_dims(images_.cols(), domain_.dim(), "subspace map domain rank");
}

SubspaceMap SubspaceMap::from_matrix(const Mat& m) {
  return SubspaceMap(Subspace::full(m.cols()), m.rows(), m);
}

SubspaceMap SubspaceMap::from_basis_images(const Subspace& domain, std::span<const Vec> vectors,
                                           std::span<const Vec> values, std::size_t codomain_dim) {
  check_dims(vectors.size(), domain.dim(), "basis image count");
  check_dims(values.size(), vectors.size(), "basis image values");
  // Column k of C = coordinates of vectors[k]; images on the canonical basis are W C^{-1}.
  std::vector<Vec> coords;
  for (const auto& v : vectors) {
    auto c = domain.coordinates(v);
    if (!c) fail(ErrorKind::precondition, "basis image vector outside the domain");
    coords.push_back(*c);
  }
  auto cinv = inverse(Mat::from_columns(domain.dim(), coords));
  if (!cinv) fail(ErrorKind::precondition, "basis image vectors are not a basis of the domain");
  Mat w = Mat::from_columns(codomain_dim, values);
  return SubspaceMap(domain, codomain_dim, w * *cinv);
}

Vec SubspaceMap::apply(const Vec& v) const {
  auto c = domain_.coordinates(v);
  if (!c) fail(ErrorKind::precondition, "vector outside the domain of a partially defined map");
  return images_ * *c;
}

Mat SubspaceMap::extended_matrix() const { return images_ * domain_.coordinate_matrix(); }

Subspace SubspaceMap::image() const { return hopfglue::image(images_); }

}  // namespace hopfglue
