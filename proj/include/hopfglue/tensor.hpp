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

// Tensor products of coordinate vectors. The basis of V (x) W is ordered
// (i, j) -> i * dim W + j, and triple products nest the same way.

#include "hopfglue/algebra.hpp"

namespace hopfglue {

Vec tensor(const Vec& a, const Vec& b);
Mat kron(const Mat& a, const Mat& b);

// The V-component paired with basis vector j of W.
Vec slice_left(const Vec& t, std::size_t dim_v, std::size_t dim_w, std::size_t j);
// The W-component paired with basis vector i of V.
Vec slice_right(const Vec& t, std::size_t dim_v, std::size_t dim_w, std::size_t i);

// (f (x) id) t and (id (x) g) t.
Vec apply_left(const Mat& f, const Vec& t, std::size_t dim_w);
Vec apply_right(const Mat& g, const Vec& t, std::size_t dim_v);

// Product in the tensor algebra A (x) B.
Vec tensor_multiply(const StructureAlgebra& a, const StructureAlgebra& b, const Vec& x, const Vec& y);

// Swap of the two factors, as a (dw*dv) x (dv*dw) matrix.
Mat flip_matrix(std::size_t dim_v, std::size_t dim_w);

// m: A (x) A -> A.
Vec multiply_legs(const StructureAlgebra& a, const Vec& t);

// Sum of l_k (x) r_k.
Vec tensor_sum(std::span<const std::pair<Vec, Vec>> terms, std::size_t dim_v, std::size_t dim_w);

}  // namespace hopfglue
