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

#include "hopfglue/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hopfglue/error.hpp"

namespace hopfglue::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::schema, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const Scalar& x) { return hopfglue::to_string(x); }

json to_json(const Vec& v) {
  json a = json::array();
  for (const Scalar& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row_vec(r)));
  return a;
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const Vec& v : s.basis()) basis.push_back(to_json(v));
  return {{"ambient", s.ambient_dim()}, {"basis", basis}};
}

json to_json(const StructureAlgebra& a) {
  json products = json::array();
  for (const Vec& v : a.table()) products.push_back(to_json(v));
  return {{"dim", a.dim()}, {"unit", to_json(a.unit())}, {"products", products}};
}

json to_json(const HopfAlgebra& h) {
  return {{"algebra", to_json(h.algebra())},
          {"comult", to_json(h.comult())},
          {"counit", to_json(h.counit())},
          {"antipode", to_json(h.antipode())}};
}

json to_json(const StrongConnection& ell) {
  json per_basis = json::array();
  for (const auto& terms : ell.all_terms()) {
    json list = json::array();
    for (const auto& [l, r] : terms) list.push_back({{"left", to_json(l)}, {"right", to_json(r)}});
    per_basis.push_back(list);
  }
  return {{"terms", per_basis}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  bad("scalar must be a string \"p/q\" or an integer");
}

Vec vec_from_json(const json& j, std::optional<std::size_t> expected_dim) {
  if (!j.is_array()) bad("vector must be an array");
  if (expected_dim && j.size() != *expected_dim)
    bad("vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(*expected_dim));
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i]);
  return v;
}

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    bad("matrix must be an array of " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vec_from_json(j[r], cols));
  return m;
}

AlgebraPtr algebra_from_json(const json& j) {
  const std::size_t dim = count_from_json(field(j, "dim"), "dim");
  const json& prods = field(j, "products");
  if (!prods.is_array() || prods.size() != dim * dim) bad("products must list dim^2 vectors");
  std::vector<Vec> table;
  table.reserve(dim * dim);
  for (const auto& p : prods) table.push_back(vec_from_json(p, dim));
  return make_algebra(dim, std::move(table), vec_from_json(field(j, "unit"), dim));
}

HopfPtr hopf_from_json(const json& j) {
  AlgebraPtr a = algebra_from_json(field(j, "algebra"));
  const std::size_t n = a->dim();
  return std::make_shared<const HopfAlgebra>(a, mat_from_json(field(j, "comult"), n * n, n),
                                             vec_from_json(field(j, "counit"), n),
                                             mat_from_json(field(j, "antipode"), n, n));
}

StrongConnection connection_from_json(const json& j, ComodulePtr target) {
  const json& per_basis = field(j, "terms");
  const std::size_t n = target->hopf().dim();
  const std::size_t d = target->dim();
  if (!per_basis.is_array() || per_basis.size() != n) bad("connection needs one term list per Hopf basis vector");
  std::vector<StrongConnection::Terms> terms;
  for (const auto& list : per_basis) {
    if (!list.is_array()) bad("connection term list must be an array");
    StrongConnection::Terms t;
    for (const auto& item : list) t.emplace_back(vec_from_json(field(item, "left"), d), vec_from_json(field(item, "right"), d));
    terms.push_back(std::move(t));
  }
  return StrongConnection(std::move(target), std::move(terms));
}

Bundle bundle_from_json(const json& j) {
  if (!j.is_object()) bad("bundle must be a JSON object");
  if (j.contains("schema") && j["schema"] != bundle_schema) bad("unsupported bundle schema");
  Bundle b;
  if (j.contains("hopf")) b.hopf = hopf_from_json(j["hopf"]);

  const json& total = field(j, "total");
  AlgebraPtr source = algebra_from_json(field(total, "algebra"));
  if (b.hopf) {
    const std::size_t rows = source->dim() * b.hopf->dim();
    b.total_comodule = make_comodule(source, b.hopf, mat_from_json(field(total, "coaction"), rows, source->dim()));
  }

  const json& pieces = field(j, "pieces");
  if (!pieces.is_array() || pieces.empty()) bad("pieces must be a non-empty array");
  std::vector<AlgMorphism> maps;
  std::vector<ComodulePtr> piece_comodules;
  std::vector<const json*> piece_connections;
  for (const auto& p : pieces) {
    AlgebraPtr a = algebra_from_json(field(p, "algebra"));
    maps.emplace_back(source, a, mat_from_json(field(p, "map"), a->dim(), source->dim()));
    if (b.hopf) {
      if (p.contains("coaction"))
        piece_comodules.push_back(
            make_comodule(a, b.hopf, mat_from_json(p["coaction"], a->dim() * b.hopf->dim(), a->dim())));
      else
        piece_comodules.push_back(induced_coaction(*b.total_comodule, maps.back()));
    }
    piece_connections.push_back(p.contains("connection") ? &p["connection"] : nullptr);
  }
  if (b.hopf) {
    b.covering = CoveringFamily(b.total_comodule, std::move(maps), piece_comodules);
    for (std::size_t i = 0; i < piece_connections.size(); ++i) {
      if (piece_connections[i]) b.connections.emplace_back(connection_from_json(*piece_connections[i], piece_comodules[i]));
      else b.connections.emplace_back(std::nullopt);
    }
    if (j.contains("connection")) b.total_connection = connection_from_json(j["connection"], b.total_comodule);
    if (j.contains("grouplike")) b.grouplike = vec_from_json(j["grouplike"], b.hopf->dim());
  } else {
    if (j.contains("connection") || j.contains("grouplike") ||
        std::any_of(piece_connections.begin(), piece_connections.end(), [](const json* p) { return p != nullptr; }))
      bad("connections need a Hopf algebra");
    b.covering = CoveringFamily(source, std::move(maps));
    b.connections.assign(b.covering.size(), std::nullopt);
  }

  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) bad("options must be an object");
    if (o.contains("cap")) b.options.cap = count_from_json(o["cap"], "cap");
    if (o.contains("piece")) b.options.piece = count_from_json(o["piece"], "piece");
    if (o.contains("order")) {
      if (!o["order"].is_array()) bad("order must be an array");
      std::vector<std::size_t> order;
      for (const auto& k : o["order"]) order.push_back(count_from_json(k, "order entry"));
      b.options.order = std::move(order);
    }
  }
  return b;
}

json to_json(const Bundle& b) {
  json j{{"schema", bundle_schema}};
  const StructureAlgebra& src = *b.covering.source;
  json total{{"algebra", to_json(src)}};
  if (b.hopf) {
    j["hopf"] = to_json(*b.hopf);
    total["coaction"] = to_json(b.total_comodule->coaction());
  }
  j["total"] = total;
  json pieces = json::array();
  for (std::size_t i = 0; i < b.covering.size(); ++i) {
    const AlgMorphism& m = b.covering.maps[i];
    json p{{"algebra", to_json(*m.codomain())}, {"map", to_json(m.matrix())}};
    if (b.hopf) p["coaction"] = to_json(b.covering.pieces[i]->coaction());
    if (i < b.connections.size() && b.connections[i]) p["connection"] = to_json(*b.connections[i]);
    pieces.push_back(p);
  }
  j["pieces"] = pieces;
  if (b.total_connection) j["connection"] = to_json(*b.total_connection);
  if (b.grouplike) j["grouplike"] = to_json(*b.grouplike);
  json options{{"cap", b.options.cap}};
  if (b.options.piece) options["piece"] = *b.options.piece;
  if (b.options.order) options["order"] = *b.options.order;
  j["options"] = options;
  return j;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad("malformed JSON in '" + path + "': " + e.what());
  }
}

Bundle read_bundle(const std::string& path) {
  try {
    return bundle_from_json(read_json(path));
  } catch (const json::exception& e) {
    bad(std::string("bundle does not match the schema: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::schema, "cannot write '" + path + "'");
  out << text;
}

}  // namespace hopfglue::io
