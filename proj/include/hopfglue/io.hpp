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

// JSON encoding of problem bundles and reports. Scalars are strings "p/q",
// vectors are arrays of scalars, matrices are arrays of rows. Every reader
// throws Error(schema) on malformed input.

#include <optional>
#include <string>
#include <vector>

#include "hopfglue/connection.hpp"
#include "hopfglue/pullback.hpp"
#include "json.hpp"

namespace hopfglue::io {

using nlohmann::json;

inline constexpr const char* bundle_schema = "hopfglue.bundle/1";
inline constexpr const char* report_schema = "hopfglue.report/1";

json to_json(const Scalar& x);
json to_json(const Vec& v);
json to_json(const Mat& m);
json to_json(const Subspace& s);
json to_json(const StructureAlgebra& a);
json to_json(const HopfAlgebra& h);
json to_json(const StrongConnection& ell);

Scalar scalar_from_json(const json& j);
// expected_dim, when given, is enforced.
Vec vec_from_json(const json& j, std::optional<std::size_t> expected_dim = std::nullopt);
Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols);
AlgebraPtr algebra_from_json(const json& j);
HopfPtr hopf_from_json(const json& j);
StrongConnection connection_from_json(const json& j, ComodulePtr target);

struct BundleOptions {
  std::size_t cap = default_closure_cap;
  std::optional<std::size_t> piece;
  std::optional<std::vector<std::size_t>> order;
};

// A covering of a (comodule) algebra together with optional piece connections,
// an optional connection on the total algebra and an optional group-like.
struct Bundle {
  HopfPtr hopf;  // null for a plain algebra covering
  ComodulePtr total_comodule;
  CoveringFamily covering;
  std::vector<std::optional<StrongConnection>> connections;
  std::optional<StrongConnection> total_connection;
  std::optional<Vec> grouplike;
  BundleOptions options;
};

Bundle bundle_from_json(const json& j);
json to_json(const Bundle& b);

Bundle read_bundle(const std::string& path);
json read_json(const std::string& path);
// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
void write_text(const std::string& path, const std::string& text);

}  // namespace hopfglue::io
