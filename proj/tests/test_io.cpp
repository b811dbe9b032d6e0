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

#include "doctest.h"
#include "hopfglue/instances.hpp"
#include "hopfglue/io.hpp"

using namespace hopfglue;

namespace {

io::Bundle e1_bundle() {
  const OrbitInstance e1 = e1_instance();
  io::Bundle b;
  b.hopf = e1.hopf;
  b.total_comodule = e1.total;
  b.covering = e1.covering;
  for (const auto& c : e1.connections) b.connections.emplace_back(c);
  b.grouplike = z2_grouplikes().at(1);
  b.options.order = std::vector<std::size_t>{0, 2, 1};
  return b;
}

ErrorKind kind_of(const io::json& j) {
  try {
    io::bundle_from_json(j);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("bundle unexpectedly accepted");
  return ErrorKind::schema;
}

}  // namespace

TEST_CASE("scalars serialize as reduced fraction strings") {
  CHECK(io::to_json(parse_scalar("-6/4")) == "-3/2");
  CHECK(io::scalar_from_json("7") == Scalar(7));
  CHECK(io::scalar_from_json(3) == Scalar(3));
  CHECK_THROWS_AS(io::scalar_from_json("1/0"), Error);
  CHECK_THROWS_AS(io::scalar_from_json(0.5), Error);
  CHECK_THROWS_AS(io::vec_from_json(io::json::array({"1", "2"}), 3), Error);
}

TEST_CASE("bundle round trip") {
  io::Bundle b = e1_bundle();
  io::json j = io::to_json(b);
  CHECK(j["schema"] == io::bundle_schema);
  io::Bundle back = io::bundle_from_json(j);
  CHECK(io::to_json(back) == j);
  CHECK(back.covering.size() == 3);
  CHECK(back.grouplike == b.grouplike);
  REQUIRE(back.options.order);
  CHECK(*back.options.order == std::vector<std::size_t>{0, 2, 1});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.covering.maps[i].matrix() == b.covering.maps[i].matrix());
    REQUIRE(back.connections[i]);
    CHECK(back.connections[i]->all_terms() == b.connections[i]->all_terms());
  }
  CHECK(io::dump(j) == io::dump(io::to_json(back)));
  CHECK(io::dump(j).back() == '\n');
}

TEST_CASE("piece coactions are induced when absent") {
  io::json j = io::to_json(e1_bundle());
  for (auto& p : j["pieces"]) p.erase("coaction");
  io::Bundle b = io::bundle_from_json(j);
  REQUIRE(b.covering.pieces.size() == 3);
  CHECK(b.covering.pieces[0]->coaction() == e1_bundle().covering.pieces[0]->coaction());
}

TEST_CASE("malformed bundles are rejected") {
  const io::json good = io::to_json(e1_bundle());
  io::json j = good;
  j["schema"] = "something.else/1";
  CHECK(kind_of(j) == ErrorKind::schema);
  j = good;
  j.erase("total");
  CHECK(kind_of(j) == ErrorKind::schema);
  j = good;
  j["pieces"][0]["map"] = "not a matrix";
  CHECK(kind_of(j) == ErrorKind::schema);
  j = good;
  j["pieces"][0]["map"].erase(0);
  CHECK(kind_of(j) == ErrorKind::schema);
  j = good;
  // 1 * u = 1 breaks the unit axiom.
  j["hopf"]["algebra"]["products"][1] = io::json::array({"1", "0"});
  CHECK(kind_of(j) == ErrorKind::invalid_structure);
  CHECK_THROWS_AS(io::read_json("/nonexistent/bundle.json"), Error);
}
