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

// Writes the reference problem bundles used by the CLI tests and the README.
// Usage: make_instances <output directory>

#include <filesystem>
#include <iostream>
#include <string>

#include "hopfglue/freestar.hpp"
#include "hopfglue/instances.hpp"
#include "hopfglue/io.hpp"

using namespace hopfglue;

namespace {

io::Bundle orbit_bundle(const OrbitInstance& inst) {
  io::Bundle b;
  b.hopf = inst.hopf;
  b.total_comodule = inst.total;
  b.covering = inst.covering;
  for (const auto& c : inst.connections) b.connections.emplace_back(c);
  b.grouplike = z2_grouplikes().at(1);
  return b;
}

io::Bundle regular_bundle(const RegularInstance& inst) {
  io::Bundle b;
  b.hopf = inst.hopf;
  b.total_comodule = inst.total;
  b.covering = inst.covering;
  for (const auto& c : inst.connections) b.connections.emplace_back(c);
  b.total_connection = inst.connections.front();
  return b;
}

void write(const std::filesystem::path& dir, const std::string& name, const io::json& j) {
  io::write_text((dir / name).string(), io::dump(j));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_instances <output directory>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  try {
    const OrbitInstance e1 = e1_instance();
    write(dir, "e1.json", io::to_json(orbit_bundle(e1)));
    write(dir, "e3.json", io::to_json(orbit_bundle(e3_instance())));

    io::Bundle dup = orbit_bundle(e1);
    dup.covering = duplicated_kernel_covering(e1);
    dup.connections.assign(3, e1.connections.front());
    write(dir, "e1_duplicated.json", io::to_json(dup));

    // l(1) = l(u) = 1 (x) 1: unital and collapsing, not colinear.
    io::Bundle naive = orbit_bundle(e1);
    const Vec& one = e1.total->algebra().unit();
    naive.total_connection = StrongConnection(e1.total, {{{one, one}}, {{one, one}}});
    write(dir, "e1_naive_connection.json", io::to_json(naive));

    write(dir, "z2_regular.json", io::to_json(regular_bundle(regular_instance(z2_hopf()))));
    write(dir, "s3_regular.json", io::to_json(regular_bundle(regular_instance(function_hopf(symmetric_group3())))));

    write(dir, "s2rt_method_one.json", freestar::to_json(freestar::reference_method_one()));
  } catch (const Error& e) {
    std::cerr << "make_instances: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
