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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfglue/error.hpp"
#include "hopfglue/scalar.hpp"

namespace hopfglue {

class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : entries_(dim) {}
  Vec(std::initializer_list<Scalar> xs) : entries_(xs) {}
  explicit Vec(std::vector<Scalar> xs) : entries_(std::move(xs)) {}

  static Vec unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_zero() const;
  // Index of the first nonzero entry, or dim() when the vector is zero.
  std::size_t leading_index() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& c);
  // this += c * o
  Vec& axpy(const Scalar& c, const Vec& o);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= Scalar(-1); }
  friend Vec operator*(const Scalar& c, Vec a) { return a *= c; }
  friend bool operator==(const Vec&, const Vec&) = default;
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b);

 private:
  std::vector<Scalar> entries_;
};

Scalar dot(const Vec& a, const Vec& b);
Vec concat(const Vec& a, const Vec& b);

// Sparse row-major matrix. Each row is a list of (column, value) pairs sorted
// by column with no stored zeros.
class Mat {
 public:
  using Entry = std::pair<std::size_t, Scalar>;
  using Row = std::vector<Entry>;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static Mat identity(std::size_t n);
  static Mat dense(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Mat from_rows(std::size_t cols, std::span<const Vec> rows);
  static Mat from_columns(std::size_t rows, std::span<const Vec> cols);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  const Row& row(std::size_t r) const { return data_[r]; }
  // Replaces a row; zero entries are dropped and the row is sorted.
  void set_row(std::size_t r, const Vec& v);
  void set_column(std::size_t c, const Vec& v);
  Vec row_vec(std::size_t r) const;
  Vec col_vec(std::size_t c) const;

  Mat transpose() const;
  Mat vstack(const Mat& below) const;
  Mat hstack(const Mat& right) const;
  // Rows [r0, r1) of this matrix.
  Mat row_block(std::size_t r0, std::size_t r1) const;

  Vec operator*(const Vec& v) const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  friend Mat operator*(const Scalar& c, const Mat& m);
  bool is_zero() const { return nnz() == 0; }

  friend bool operator==(const Mat&, const Mat&) = default;

  // Raw access for elimination kernels.
  std::vector<Row>& mutable_rows() { return data_; }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

// Unique reduced row-echelon form. Pivots are taken column by column, using the
// first row (at or below the current position) with a nonzero entry.
struct RrefResult {
  Mat reduced;                      // zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row of `reduced`
};
RrefResult rref_full(const Mat& m);
// Same shape as m, zero rows at the bottom.
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);

class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const Vec> vectors);
  static Subspace row_space(const Mat& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const& { return basis_; }
  // Safe in range-for over a temporary subspace.
  std::vector<Vec> basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the canonical basis, or nothing when v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  // ambient_dim x dim, columns are basis vectors.
  Mat basis_matrix() const;
  // dim x ambient_dim, maps members to their coordinates (reads pivot entries).
  Mat coordinate_matrix() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace kernel(const Mat& m);
// Image of the columns of m, or of m restricted to `domain`.
Subspace image(const Mat& m);
Subspace image(const Mat& m, const Subspace& domain);
// Canonical particular solution of m x = v: zero in every free-variable position.
std::optional<Vec> solve(const Mat& m, const Vec& v);
// Direct complement of sub inside within, by a greedy sweep of within's canonical basis.
Subspace complement_in(const Subspace& sub, const Subspace& within);
// Inverse of a square matrix, or nothing when singular.
std::optional<Mat> inverse(const Mat& m);
// Preimage {x : m x in target}.
Subspace preimage(const Mat& m, const Subspace& target);

// V / W with canonical representatives complement_in(W, V).
struct LinearQuotient {
  Subspace killed;           // W
  Subspace representatives;  // complement of W, canonical basis
  Mat projection;            // dim(V/W) x ambient, kills W, identity on representatives' coordinates
  Mat section;               // ambient x dim(V/W), columns are the representatives
  std::size_t dim() const { return representatives.dim(); }
};
LinearQuotient linear_quotient(const Subspace& killed);

// Greedy independent-set builder with fully reduced echelon rows. Adding a
// vector succeeds iff it is independent of everything added so far.
class IndependentSet {
 public:
  explicit IndependentSet(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  bool try_add(const Vec& v);
  bool is_independent(const Vec& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  Vec reduce(Vec v) const;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// A linear map defined on a subspace of its ambient domain. `images` holds the
// image of each canonical basis vector of `domain`, as columns.
class SubspaceMap {
 public:
  SubspaceMap() = default;
  SubspaceMap(Subspace domain, std::size_t codomain_dim, Mat images);

  static SubspaceMap from_matrix(const Mat& m);  // domain = everything
  // Builds the map sending vectors[k] to values[k]; `vectors` must be a basis of `domain`.
  static SubspaceMap from_basis_images(const Subspace& domain, std::span<const Vec> vectors,
                                       std::span<const Vec> values, std::size_t codomain_dim);

  const Subspace& domain() const { return domain_; }
  std::size_t codomain_dim() const { return codomain_; }
  const Mat& images() const { return images_; }

  Vec apply(const Vec& v) const;  // throws when v is outside the domain
  // codomain x ambient matrix agreeing with this map on the domain and zero on
  // the complement of the domain's pivot coordinates.
  Mat extended_matrix() const;
  Subspace image() const;

 private:
  Subspace domain_;
  std::size_t codomain_ = 0;
  Mat images_;
};

}  // namespace hopfglue
