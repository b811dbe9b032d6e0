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

#include "hopfglue/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace hopfglue {

SubspaceFamily::SubspaceFamily(std::size_t ambient, std::vector<Subspace> ms)
    : ambient_dim(ambient), members(std::move(ms)) {
  for (const auto& m : members)
    if (m.ambient_dim() != ambient_dim) fail(ErrorKind::dimension_mismatch, "family member ambient dimension");
}

LatticeClosure lattice_closure(const SubspaceFamily& f, std::size_t cap) {
  if (cap < 1) fail(ErrorKind::precondition, "closure cap must be positive");
  LatticeClosure c;
  c.generated_from = f;
  std::map<Subspace, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> join, meet;
  bool overflow = false;
  auto add = [&](const Subspace& s) -> std::uint32_t {
    if (auto it = index.find(s); it != index.end()) return it->second;
    if (c.elements.size() >= cap) {
      overflow = true;
      return 0;
    }
    auto k = static_cast<std::uint32_t>(c.elements.size());
    index.emplace(s, k);
    c.elements.push_back(s);
    return k;
  };
  add(Subspace::zero(f.ambient_dim));
  add(Subspace::full(f.ambient_dim));
  for (const auto& m : f.members) add(m);
  for (std::size_t k = 0; k < c.elements.size() && !overflow; ++k) {
    join.resize(c.elements.size());
    meet.resize(c.elements.size());
    for (std::size_t l = 0; l <= k && !overflow; ++l) {
      Subspace a = c.elements[k], b = c.elements[l];
      auto j = add(sum(a, b));
      auto m = add(intersect(a, b));
      join[k].resize(k + 1);
      meet[k].resize(k + 1);
      join[k][l] = j;
      meet[k][l] = m;
    }
  }
  c.complete = !overflow;
  if (c.complete) {
    const std::size_t n = c.elements.size();
    c.join.assign(n, std::vector<std::uint32_t>(n));
    c.meet.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l <= k; ++l) {
        c.join[k][l] = c.join[l][k] = join[k][l];
        c.meet[k][l] = c.meet[l][k] = meet[k][l];
      }
  }
  return c;
}

DistributivityResult check_distributive(const LatticeClosure& c) {
  if (!c.complete)
    fail(ErrorKind::undetermined, "lattice closure incomplete within cap (" +
                                      std::to_string(c.elements.size()) + " elements)");
  DistributivityResult r;
  r.counterexample = kernels::distributivity_failure(c.join, c.meet, kernels::Mode::parallel);
  r.distributive = !r.counterexample.has_value();
  return r;
}

bool is_distributive(const LatticeClosure& c) { return check_distributive(c).distributive; }

std::vector<std::size_t> mask_indices(IndexMask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (m & (IndexMask(1) << i)) out.push_back(i);
  return out;
}

std::vector<IndexMask> admissible_order(std::size_t n) {
  if (n > 20) fail(ErrorKind::out_of_range, "index set too large for subset enumeration");
  std::vector<IndexMask> all;
  for (IndexMask m = 0; m < (IndexMask(1) << n); ++m) all.push_back(m);
  std::sort(all.begin(), all.end(), [](IndexMask a, IndexMask b) {
    auto ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return mask_indices(a) < mask_indices(b);
  });
  return all;
}

Subspace family_intersection(const SubspaceFamily& f, IndexMask gamma) {
  Subspace acc = Subspace::full(f.ambient_dim);
  for (auto i : mask_indices(gamma)) acc = intersect(acc, f.members.at(i));
  return acc;
}

std::vector<Vec> PartitionedBasis::flattened() const {
  std::vector<Vec> out;
  for (auto g : order) out.insert(out.end(), blocks[g].begin(), blocks[g].end());
  return out;
}

PartitionedBasis partitioned_basis(const SubspaceFamily& f, std::size_t cap) {
  LatticeClosure c = lattice_closure(f, cap);
  auto d = check_distributive(c);
  if (!d.distributive) fail(ErrorKind::precondition, "family does not generate a distributive lattice");
  PartitionedBasis pb;
  pb.index_count = f.size();
  pb.order = admissible_order(f.size());
  pb.blocks.assign(std::size_t(1) << f.size(), {});
  IndependentSet acc(f.ambient_dim);
  for (auto g : pb.order) {
    Subspace ag = family_intersection(f, g);
    for (const auto& v : ag.basis())
      if (acc.try_add(v)) pb.blocks[g].push_back(v);
  }
  if (!verify_partition_property(f, pb))
    fail(ErrorKind::invalid_structure, "partitioned basis fails the span property");
  return pb;
}

bool verify_partition_property(const SubspaceFamily& f, const PartitionedBasis& b) {
  auto all = b.flattened();
  if (all.size() != f.ambient_dim || Subspace::span(f.ambient_dim, all).dim() != f.ambient_dim) return false;
  const IndexMask count = IndexMask(1) << b.index_count;
  for (IndexMask g = 0; g < count; ++g) {
    std::vector<Vec> gens;
    for (IndexMask h = 0; h < count; ++h)
      if ((h & g) == g) gens.insert(gens.end(), b.blocks[h].begin(), b.blocks[h].end());
    if (Subspace::span(f.ambient_dim, gens) != family_intersection(f, g)) return false;
  }
  return true;
}

ImageIntersectionReport check_image_intersection(const Mat& pi, const SubspaceFamily& f) {
  if (pi.cols() != f.ambient_dim) fail(ErrorKind::dimension_mismatch, "image intersection map domain");
  Subspace k = kernel(pi);
  Subspace total = Subspace::zero(f.ambient_dim), split = Subspace::zero(f.ambient_dim);
  Subspace inter = Subspace::full(f.ambient_dim), images = Subspace::full(pi.rows());
  for (const auto& a : f.members) {
    total = sum(total, a);
    split = sum(split, intersect(k, a));
    inter = intersect(inter, a);
    images = intersect(images, image(pi, a));
  }
  ImageIntersectionReport r;
  r.hypothesis = intersect(k, total) == split;
  r.conclusion = image(pi, inter) == images;
  return r;
}

}  // namespace hopfglue
