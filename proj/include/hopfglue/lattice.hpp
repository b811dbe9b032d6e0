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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hopfglue/exactla.hpp"
#include "hopfglue/kernels.hpp"

namespace hopfglue {

struct SubspaceFamily {
  std::size_t ambient_dim = 0;
  std::vector<Subspace> members;

  SubspaceFamily() = default;
  SubspaceFamily(std::size_t ambient, std::vector<Subspace> ms);  // checks ambient dimensions
  std::size_t size() const { return members.size(); }
};

inline constexpr std::size_t default_closure_cap = 4096;

struct LatticeClosure {
  std::vector<Subspace> elements;  // discovery order; elements[0] = {0}, elements[1] = ambient
  bool complete = false;
  SubspaceFamily generated_from;
  // join[a][b] / meet[a][b] index into elements; filled only when complete.
  kernels::IndexTable join, meet;
};

// Closes {0, ambient} plus the members under + and intersection, stopping once
// the element count would exceed `cap`.
LatticeClosure lattice_closure(const SubspaceFamily& f, std::size_t cap = default_closure_cap);

struct DistributivityResult {
  bool distributive = true;
  std::optional<std::array<std::size_t, 3>> counterexample;  // indices into elements
};
// Throws Error(undetermined) when the closure is incomplete.
DistributivityResult check_distributive(const LatticeClosure& c);
bool is_distributive(const LatticeClosure& c);

// Index subsets of I = {0, ..., n-1} are bit masks.
using IndexMask = std::uint32_t;
std::vector<std::size_t> mask_indices(IndexMask m);
// Descending by size, ties broken lexicographically on the sorted index lists.
std::vector<IndexMask> admissible_order(std::size_t n);

// A_Gamma; A_empty is the ambient space.
Subspace family_intersection(const SubspaceFamily& f, IndexMask gamma);

struct PartitionedBasis {
  std::size_t index_count = 0;
  std::vector<IndexMask> order;
  std::vector<std::vector<Vec>> blocks;  // indexed by mask
  const std::vector<Vec>& block(IndexMask g) const { return blocks.at(g); }
  // All blocks concatenated in admissible order.
  std::vector<Vec> flattened() const;
};

PartitionedBasis partitioned_basis(const SubspaceFamily& f, std::size_t cap = default_closure_cap);
// A_Gamma = span of the blocks of all supersets of Gamma, for every Gamma, and
// the union of the blocks is a basis of the ambient space.
bool verify_partition_property(const SubspaceFamily& f, const PartitionedBasis& b);

struct ImageIntersectionReport {
  bool hypothesis = false;  // ker pi cap sum A_i = sum (ker pi cap A_i)
  bool conclusion = false;  // pi(cap A_i) = cap pi(A_i)
};
ImageIntersectionReport check_image_intersection(const Mat& pi, const SubspaceFamily& f);

}  // namespace hopfglue
