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

#include "hopfglue/tensor.hpp"

namespace hopfglue {

Vec tensor(const Vec& a, const Vec& b) {
  Vec out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  }
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, x] : a.row(r))
      for (std::size_t s = 0; s < b.rows(); ++s)
        for (const auto& [d, y] : b.row(s)) out.set(r * b.rows() + s, c * b.cols() + d, x * y);
  return out;
}

Vec slice_left(const Vec& t, std::size_t dim_v, std::size_t dim_w, std::size_t j) {
  if (t.dim() != dim_v * dim_w) fail(ErrorKind::dimension_mismatch, "tensor slice");
  Vec out(dim_v);
  for (std::size_t i = 0; i < dim_v; ++i) out[i] = t[i * dim_w + j];
  return out;
}

Vec slice_right(const Vec& t, std::size_t dim_v, std::size_t dim_w, std::size_t i) {
  if (t.dim() != dim_v * dim_w) fail(ErrorKind::dimension_mismatch, "tensor slice");
  Vec out(dim_w);
  for (std::size_t j = 0; j < dim_w; ++j) out[j] = t[i * dim_w + j];
  return out;
}

Vec apply_left(const Mat& f, const Vec& t, std::size_t dim_w) {
  const std::size_t dim_v = f.cols();
  if (t.dim() != dim_v * dim_w) fail(ErrorKind::dimension_mismatch, "apply_left");
  Vec out(f.rows() * dim_w);
  for (std::size_t j = 0; j < dim_w; ++j) {
    Vec img = f * slice_left(t, dim_v, dim_w, j);
    for (std::size_t r = 0; r < f.rows(); ++r) out[r * dim_w + j] = img[r];
  }
  return out;
}

Vec apply_right(const Mat& g, const Vec& t, std::size_t dim_v) {
  const std::size_t dim_w = g.cols();
  if (t.dim() != dim_v * dim_w) fail(ErrorKind::dimension_mismatch, "apply_right");
  Vec out(dim_v * g.rows());
  for (std::size_t i = 0; i < dim_v; ++i) {
    Vec img = g * slice_right(t, dim_v, dim_w, i);
    for (std::size_t r = 0; r < g.rows(); ++r) out[i * g.rows() + r] = img[r];
  }
  return out;
}

Vec tensor_multiply(const StructureAlgebra& a, const StructureAlgebra& b, const Vec& x, const Vec& y) {
  const std::size_t da = a.dim(), db = b.dim();
  if (x.dim() != da * db || y.dim() != da * db) fail(ErrorKind::dimension_mismatch, "tensor product operand");
  Vec out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      const Scalar& xv = x[i * db + j];
      if (is_zero(xv)) continue;
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          const Scalar& yv = y[k * db + l];
          if (is_zero(yv)) continue;
          out.axpy(xv * yv, tensor(a.product(i, k), b.product(j, l)));
        }
    }
  return out;
}

Mat flip_matrix(std::size_t dim_v, std::size_t dim_w) {
  Mat m(dim_v * dim_w, dim_v * dim_w);
  for (std::size_t i = 0; i < dim_v; ++i)
    for (std::size_t j = 0; j < dim_w; ++j) m.set(j * dim_v + i, i * dim_w + j, Scalar(1));
  return m;
}

Vec multiply_legs(const StructureAlgebra& a, const Vec& t) {
  const std::size_t n = a.dim();
  if (t.dim() != n * n) fail(ErrorKind::dimension_mismatch, "multiply_legs");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(t[i * n + j])) out.axpy(t[i * n + j], a.product(i, j));
  return out;
}

Vec tensor_sum(std::span<const std::pair<Vec, Vec>> terms, std::size_t dim_v, std::size_t dim_w) {
  Vec out(dim_v * dim_w);
  for (const auto& [l, r] : terms) out += tensor(l, r);
  return out;
}

}  // namespace hopfglue
