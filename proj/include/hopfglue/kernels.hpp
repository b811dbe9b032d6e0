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

// Hot loops with two implementations each: a plain serial reference and an
// OpenMP version. Both must return identical results; the test suite and the
// benchmark compare them directly.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hopfglue/exactla.hpp"

namespace hopfglue::kernels {

enum class Mode { serial, parallel };

// Brings `rows` to reduced row-echelon form in place, dropping zero rows.
// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref_rows(std::vector<Mat::Row>& rows, std::size_t cols, Mode mode);

// table[i*n + j] holds e_i e_j. Returns the lexicographically first (i,j,k)
// with (e_i e_j) e_k != e_i (e_j e_k).
std::optional<std::array<std::size_t, 3>> associativity_failure(const std::vector<Vec>& table,
                                                                std::size_t n, Mode mode);

using IndexTable = std::vector<std::vector<std::uint32_t>>;
// Lexicographically first (a,b,c) with a meet (b join c) != (a meet b) join (a meet c).
std::optional<std::array<std::size_t, 3>> distributivity_failure(const IndexTable& join,
                                                                 const IndexTable& meet, Mode mode);

}  // namespace hopfglue::kernels
