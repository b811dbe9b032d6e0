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

// Reference instances: free Z2-sets covered by unions of orbits.

#include <vector>

#include "hopfglue/pullback.hpp"

namespace hopfglue {

// Functions on Z2 in the basis {1, u} with u(+1) = 1, u(-1) = -1.
HopfPtr z2_hopf();
// The group-likes 1 and u.
std::vector<Vec> z2_grouplikes();

// P = functions on Z2 x {0, ..., orbits-1}; point (o, g) has index 2o + (g == +1 ? 0 : 1).
// Piece i is the restriction to the orbits listed in piece_orbits[i], with the
// connection l_i(u) = tau_i (x) tau_i where tau_i is +1 on (o, +1) and -1 on (o, -1).
struct OrbitInstance {
  std::size_t orbits = 0;
  std::vector<std::vector<std::size_t>> piece_orbits;
  HopfPtr hopf;
  ComodulePtr total;
  CoveringFamily covering;
  std::vector<StrongConnection> connections;
  std::vector<Vec> taus;  // tau_i in piece coordinates
};

OrbitInstance orbit_instance(std::size_t orbits, std::vector<std::vector<std::size_t>> piece_orbits);
// Three orbits, piece i covers the two orbits other than i.
OrbitInstance e1_instance();
// Four orbits, piece i in {0, 1, 2} covers every orbit but i; orbit 3 is the triple overlap.
OrbitInstance e3_instance();
// The sub-covering of `inst` made of the listed pieces.
OrbitInstance sub_instance(const OrbitInstance& inst, const std::vector<std::size_t>& pieces);

// The section-indicator function of the given orbit subset, as an element of P.
Vec section_indicator(std::size_t orbits, const std::vector<std::size_t>& subset);

// The gluing map pi^i_j followed by the swap of the two points of `orbit` in A_ij.
GluingFamily swap_perturbed(const GluingFamily& f, const OrbitInstance& inst, std::size_t i, std::size_t j,
                            std::size_t orbit);

// A covering whose kernels repeat: three copies of piece 0 of e1_instance.
CoveringFamily duplicated_kernel_covering(const OrbitInstance& e1);

// The regular comodule of a Hopf algebra with its canonical strong connection
// l(h) = S(h<1>) (x) h<2>, covered by the identity map.
struct RegularInstance {
  HopfPtr hopf;
  ComodulePtr total;
  CoveringFamily covering;
  std::vector<StrongConnection> connections;
};
RegularInstance regular_instance(HopfPtr h);

}  // namespace hopfglue
