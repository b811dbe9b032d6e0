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

// Command-line driver: reads a problem bundle, runs one pipeline stage and
// writes a deterministic JSON report.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopfglue/freestar.hpp"
#include "hopfglue/io.hpp"
#include "hopfglue/splitting.hpp"

using namespace hopfglue;
using io::json;

namespace {

enum Exit { ok = 0, check_failed = 1, bad_input = 2, undetermined = 3, not_cocommutative = 4 };

struct Flags {
  std::string in, out, expect, order;
  std::optional<std::size_t> cap, piece;
  std::string method = "both";
  std::size_t cutoff = 16;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::precondition:
    case ErrorKind::inconsistent: return check_failed;
    case ErrorKind::undetermined: return undetermined;
    case ErrorKind::not_cocommutative: return not_cocommutative;
    default: return bad_input;
  }
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::invalid_structure: return "invalid_structure";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::not_cocommutative: return "not_cocommutative";
    case ErrorKind::undetermined: return "undetermined";
    case ErrorKind::inconsistent: return "inconsistent";
    case ErrorKind::out_of_range: return "out_of_range";
    case ErrorKind::schema: return "schema";
  }
  return "unknown";
}

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  json& stage(const std::string& name, bool pass) {
    stages_.push_back({{"stage", name}, {"pass", pass}, {"witnesses", json::object()}, {"artifacts", json::object()}});
    pass_ = pass_ && pass;
    return stages_.back();
  }
  json& metadata() { return metadata_; }
  bool pass() const { return pass_; }

  json to_json() const {
    json meta = metadata_;
    meta["canonical_bases"] = "reduced row-echelon";
    meta["preimage_policy"] = "free variables set to zero";
    meta["complement_policy"] = "greedy sweep of the canonical basis";
    return {{"schema", io::report_schema},
            {"version", HOPFGLUE_VERSION},
            {"command", command_},
            {"pass", pass_},
            {"stages", stages_},
            {"metadata", meta}};
  }

 private:
  std::string command_;
  json stages_ = json::array();
  json metadata_ = json::object();
  bool pass_ = true;
};

void emit(const Flags& f, const json& j) {
  const std::string text = io::dump(j);
  if (f.out.empty()) std::cout << text;
  else io::write_text(f.out, text);
}

io::Bundle load(const Flags& f) {
  if (f.in.empty()) fail(ErrorKind::schema, "--in is required");
  io::Bundle b = io::read_bundle(f.in);
  if (f.cap) b.options.cap = *f.cap;
  if (f.piece) b.options.piece = *f.piece;
  if (!f.order.empty()) {
    std::vector<std::size_t> order;
    std::string tok;
    for (char c : f.order + ",") {
      if (c == ',') {
        if (tok.empty()) fail(ErrorKind::schema, "malformed --order list");
        order.push_back(std::stoul(tok));
        tok.clear();
      } else if (c >= '0' && c <= '9') {
        tok += c;
      } else if (c != ' ') {
        fail(ErrorKind::schema, "malformed --order list");
      }
    }
    b.options.order = std::move(order);
  }
  return b;
}

std::vector<StrongConnection> required_connections(const io::Bundle& b) {
  if (!b.hopf) fail(ErrorKind::schema, "this command needs a Hopf algebra and coactions");
  std::vector<StrongConnection> out;
  for (std::size_t i = 0; i < b.connections.size(); ++i) {
    if (!b.connections[i]) fail(ErrorKind::schema, "piece " + std::to_string(i) + " has no connection");
    out.push_back(*b.connections[i]);
  }
  return out;
}

void require_cocommutative(const io::Bundle& b) {
  if (b.hopf && !is_cocommutative(*b.hopf))
    fail(ErrorKind::not_cocommutative, "the Hopf algebra is not co-commutative");
}

json connection_failures(const ConnectionReport& r) {
  json a = json::array();
  for (const auto& fl : r.failures)
    a.push_back({{"axiom", fl.axiom}, {"basis_index", fl.basis_index}, {"residual", io::to_json(fl.residual)}});
  return a;
}

json verdicts(const ConnectionReport& r) {
  return {{"unital", r.unital}, {"collapse", r.collapse}, {"right_colinear", r.right_colinear},
          {"left_colinear", r.left_colinear}};
}

std::string mask_name(IndexMask m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : mask_indices(m)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

// ---- commands ----

int check_covering_cmd(const Flags& f) {
  io::Bundle b = load(f);
  Report rep("check-covering");
  rep.metadata()["cap"] = b.options.cap;
  CoveringReport c = check_covering(b.covering, b.options.cap);
  json& st = rep.stage("covering", c.pass());
  st["artifacts"]["closure_size"] = c.closure_size;
  st["artifacts"]["trivial_intersection"] = c.trivial_intersection;
  st["artifacts"]["distributive"] = c.distributive;
  st["artifacts"]["determined"] = c.determined;
  if (!c.trivial_intersection) st["witnesses"]["intersection"] = io::to_json(c.intersection_witness);
  if (!c.duplicate_kernels.empty()) {
    json d = json::array();
    for (const auto& [i, j] : c.duplicate_kernels) d.push_back({i, j});
    st["witnesses"]["duplicate_kernels"] = d;
  }
  if (c.counterexample) {
    json t = json::array();
    for (const auto& s : *c.counterexample) t.push_back(io::to_json(s));
    st["witnesses"]["distributivity_counterexample"] = t;
  }
  bool any_connection = false;
  for (const auto& c2 : b.connections) any_connection = any_connection || c2.has_value();
  if (b.hopf && any_connection) {
    PiecewiseReport p = check_piecewise_preconditions(b.covering, b.connections, b.options.cap);
    json& ps = rep.stage("piecewise_principal", p.pass());
    json prin = json::array();
    for (auto v : p.principality) prin.push_back(to_string(v));
    ps["artifacts"]["principality"] = prin;
    ps["artifacts"]["colinear"] = p.colinear;
    ps["artifacts"]["coinvariant_covering"] = p.coinvariant_covering.pass();
  }
  emit(f, rep.to_json());
  if (!c.determined) return undetermined;
  return rep.pass() ? ok : check_failed;
}

int check_cocycle_cmd(const Flags& f) {
  io::Bundle b = load(f);
  Report rep("check-cocycle");
  GluingFamily g = canonical_gluing(b.covering);
  CocycleReport c = check_cocycle(g);
  json& st = rep.stage("cocycle", c.pass);
  st["artifacts"]["triples_checked"] = c.triples_checked;
  json fl = json::array();
  for (const auto& x : c.failures)
    fl.push_back({{"triple", {x.i, x.j, x.k}}, {"condition", x.condition}, {"witness", io::to_json(x.witness)},
                  {"detail", x.detail}});
  if (!fl.empty()) st["witnesses"]["failures"] = fl;
  rep.metadata()["gluing"] = "canonical quotients P/(ker pi_i + ker pi_j)";
  emit(f, rep.to_json());
  return rep.pass() ? ok : check_failed;
}

int build_pullback_cmd(const Flags& f) {
  io::Bundle b = load(f);
  Report rep("build-pullback");
  GluingFamily g = canonical_gluing(b.covering);
  MultiPullback m = multipullback(g);
  IsomorphismReport iso = check_pullback_isomorphism(b.covering, m);
  json& st = rep.stage("pullback_isomorphism", iso.pass());
  st["artifacts"]["pullback_dim"] = m.dim();
  st["artifacts"]["lands_in_pullback"] = iso.lands_in_pullback;
  st["artifacts"]["bijective"] = iso.bijective;
  st["artifacts"]["multiplicative"] = iso.multiplicative;
  st["artifacts"]["matrix"] = io::to_json(iso.matrix);
  st["artifacts"]["pullback_basis"] = io::to_json(m.total.space);
  emit(f, rep.to_json());
  return rep.pass() ? ok : check_failed;
}

int partition_basis_cmd(const Flags& f) {
  io::Bundle b = load(f);
  Report rep("partition-basis");
  rep.metadata()["cap"] = b.options.cap;
  SubspaceFamily fam = b.covering.kernel_family();
  PartitionedBasis pb = partitioned_basis(fam, b.options.cap);
  const bool good = verify_partition_property(fam, pb);
  json& st = rep.stage("partitioned_basis", good);
  json blocks = json::object();
  json order = json::array();
  for (IndexMask g : pb.order) {
    order.push_back(mask_name(g));
    json block = json::array();
    for (const auto& v : pb.block(g)) block.push_back(io::to_json(v));
    blocks[mask_name(g)] = block;
  }
  st["artifacts"]["blocks"] = blocks;
  rep.metadata()["admissible_order"] = order;
  emit(f, rep.to_json());
  return rep.pass() ? ok : check_failed;
}

int build_splitting_cmd(const Flags& f) {
  io::Bundle b = load(f);
  Report rep("build-splitting");
  CoveringPipeline p = build_covering_pipeline(b.covering, required_connections(b), b.options.cap);
  const std::size_t n = b.covering.size();
  std::vector<std::size_t> pieces;
  if (b.options.piece) pieces.push_back(*b.options.piece);
  else for (std::size_t i = 0; i < n; ++i) pieces.push_back(i);
  if (b.options.order && !b.options.piece) fail(ErrorKind::schema, "--order needs --piece");
  const Mat back = *inverse(p.to_pullback);
  json orders = json::object();
  for (std::size_t i : pieces) {
    std::vector<std::size_t> kappa = b.options.order ? *b.options.order : default_order(n, i);
    Splitting s = global_splitting(p.pullback, p.splittings.alphas, p.splittings.betas, i, kappa,
                                   {.debug_checkpoints = true, .cap = b.options.cap});
    bool section_ok = true;
    for (std::size_t e = 0; e < s.section.domain().ambient_dim(); ++e) {
      Vec x = Vec::unit(s.section.domain().ambient_dim(), e);
      section_ok = section_ok && s.pi * s.apply(x) == x;
    }
    json& st = rep.stage("global_splitting_" + std::to_string(i), section_ok && s.unital && s.colinear);
    st["artifacts"]["pi_after_alpha_is_identity"] = section_ok;
    st["artifacts"]["unital"] = s.unital;
    st["artifacts"]["colinear"] = s.colinear;
    st["artifacts"]["section_in_P"] = io::to_json(back * s.section.extended_matrix());
    orders[std::to_string(i)] = kappa;
  }
  rep.metadata()["kappa"] = orders;
  rep.metadata()["cap"] = b.options.cap;
  emit(f, rep.to_json());
  return rep.pass() ? ok : check_failed;
}

// Piecewise synthesis on the covering, transported back to P coordinates.
StrongConnection synthesize(const io::Bundle& b, Report& rep) {
  require_cocommutative(b);
  CoveringPipeline p = build_covering_pipeline(b.covering, required_connections(b), b.options.cap);
  Synthesis syn(p.pieces, p.pullback.comodule, p.projections);
  Synthesis::ProofReport proof = syn.check_proof_identities();
  json& ps = rep.stage("proof_identities", proof.pass());
  ps["artifacts"] = {{"theta_of_unit_zero", proof.theta_of_unit_zero},
                     {"T0_zero", proof.T0_zero},
                     {"projections_vanish", proof.projections_vanish},
                     {"recursion", proof.recursion},
                     {"leg_products_coinvariant", proof.leg_products_coinvariant}};
  if (!proof.failures.empty()) ps["witnesses"]["failures"] = proof.failures;

  const StrongConnection on_pullback = syn.connection();
  const Mat back = *inverse(p.to_pullback);
  std::vector<StrongConnection::Terms> terms;
  for (const auto& list : on_pullback.all_terms()) {
    StrongConnection::Terms t;
    for (const auto& [l, r] : list) t.emplace_back(back * l, back * r);
    terms.push_back(std::move(t));
  }
  json orders = json::array();
  for (std::size_t i = 0; i < b.covering.size(); ++i) orders.push_back(default_order(b.covering.size(), i));
  rep.metadata()["kappa"] = orders;
  rep.metadata()["cap"] = b.options.cap;
  rep.metadata()["piece_order"] = "bundle order";
  return StrongConnection(b.total_comodule, std::move(terms));
}

int synthesize_cmd(const Flags& f) {
  io::Bundle b = load(f);
  Report rep("synthesize-connection");
  StrongConnection ell = synthesize(b, rep);
  ConnectionReport v = verify_connection(ell);
  json& st = rep.stage("verify_connection", v.pass());
  st["artifacts"]["verdicts"] = verdicts(v);
  st["artifacts"]["connection"] = io::to_json(ell);
  if (!v.pass()) st["witnesses"]["failures"] = connection_failures(v);
  emit(f, rep.to_json());
  return rep.pass() ? ok : check_failed;
}

int verify_cmd(const Flags& f) {
  io::Bundle b = load(f);
  Report rep("verify-connection");
  rep.metadata()["connection_source"] = b.total_connection ? "bundle" : "synthesized";
  StrongConnection ell = b.total_connection ? *b.total_connection : synthesize(b, rep);
  ConnectionReport v = verify_connection(ell);
  json& st = rep.stage("verify_connection", v.pass());
  st["artifacts"]["verdicts"] = verdicts(v);
  if (!v.pass()) st["witnesses"]["failures"] = connection_failures(v);
  emit(f, rep.to_json());
  return rep.pass() ? ok : check_failed;
}

int chern_galois_cmd(const Flags& f) {
  io::Bundle b = load(f);
  if (!b.grouplike) fail(ErrorKind::schema, "bundle has no group-like element");
  Report rep("chern-galois");
  rep.metadata()["connection_source"] = b.total_connection ? "bundle" : "synthesized";
  StrongConnection ell = b.total_connection ? *b.total_connection : synthesize(b, rep);
  ConnectionReport v = verify_connection(ell);
  rep.stage("verify_connection", v.pass())["artifacts"]["verdicts"] = verdicts(v);
  ProjectorResult pr = chern_galois_projector(ell, GroupLike(b.hopf, *b.grouplike));
  json& st = rep.stage("projector", pr.idempotent && pr.coinvariant);
  json entries = json::array();
  for (const auto& row : pr.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(io::to_json(e));
    entries.push_back(r);
  }
  st["artifacts"] = {{"size", pr.size}, {"idempotent", pr.idempotent}, {"coinvariant", pr.coinvariant},
                     {"entries", entries}};
  rep.metadata()["legs"] = "rank factorization of l(g) over canonical pivots";
  emit(f, rep.to_json());
  return rep.pass() ? ok : check_failed;
}

int example_cmd(const Flags& f) {
  namespace fs = freestar;
  if (f.method != "1" && f.method != "2" && f.method != "both") fail(ErrorKind::schema, "--method must be 1, 2 or both");
  // Validate the cutoff before any work so a bad value is a usage error.
  if (f.cutoff < 4) fail(ErrorKind::out_of_range, "cutoff must be at least 4");
  Report rep("example-s2rt");
  const bool one = f.method != "2", two = f.method != "1";

  if (one) {
    fs::MethodOneResult m = fs::method_one();
    json& t = rep.stage("method_one_transfers", fs::in_pullback(fs::merge(
                                                     fs::SymElem{0b001, {fs::tu(fs::one()), {}, {}}}, m.a)));
    t["artifacts"]["a"] = fs::to_json(m.a);
    t["artifacts"]["b"] = fs::to_json(m.b);
    rep.stage("method_one_intermediate", m.ell01.at_u == fs::reference_method_one_partial().at_u)["artifacts"]["ell01"] =
        fs::to_json(m.ell01);
    const std::string got = io::dump(fs::to_json(m.ell));
    bool matches = m.ell.at_u == fs::reference_method_one().at_u && got == io::dump(fs::to_json(fs::reference_method_one()));
    json& st = rep.stage("method_one_equals_reference", matches);
    st["artifacts"]["connection"] = fs::to_json(m.ell);
    if (!f.expect.empty()) {
      std::ifstream in(f.expect, std::ios::binary);
      if (!in) fail(ErrorKind::schema, "cannot open '" + f.expect + "'");
      std::string want((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      rep.stage("method_one_matches_expect_file", want == got);
    }
    fs::SymbolicReport v = fs::verify_symbolic(m.ell);
    rep.stage("method_one_axioms", v.pass());
    rep.stage("method_one_collapse_unit", fs::leg_collapse(m.ell) == fs::SymElem::unit(fs::all_slots));
    rep.stage("method_one_legs_independent", fs::legs_independent(m.ell));
    fs::SymProjector p = fs::projector(m.ell);
    rep.stage("method_one_projector", p.idempotent && p.degree_zero)["artifacts"]["size"] = p.size;
  }
  if (two) {
    fs::MethodTwoResult m = fs::method_two();
    json& st = rep.stage("method_two_equals_reference", m.ell.at_u == fs::reference_method_two().at_u);
    st["artifacts"]["connection"] = fs::to_json(m.ell);
    json g = json::array();
    for (const auto& x : m.gammas) g.push_back(fs::to_json(x));
    st["artifacts"]["gammas"] = g;
    rep.stage("method_two_axioms", fs::verify_symbolic(m.ell).pass());
    rep.stage("method_two_collapse_unit", fs::leg_collapse(m.ell) == fs::SymElem::unit(fs::all_slots));
    rep.stage("method_two_legs_independent", fs::legs_independent(m.ell));
    fs::SymProjector p = fs::projector(m.ell);
    rep.stage("method_two_projector", p.idempotent && p.degree_zero);
  }
  fs::ShiftReport sr = fs::verify_En(f.cutoff);
  json& st = rep.stage("shift_representation", sr.pass());
  st["artifacts"] = {{"cutoff", sr.cutoff},
                     {"pairs_checked", sr.pairs_checked},
                     {"isometry_via_normal_form", sr.isometry_via_nf},
                     {"isometry_below_edge", sr.isometry_below_edge},
                     {"edge_truncated", sr.edge_truncated},
                     {"s_s_star_not_identity", sr.ss_star_not_identity}};
  if (!sr.failures.empty()) {
    json fl = json::array();
    for (const auto& [n, m] : sr.failures) fl.push_back({n, m});
    st["witnesses"]["failures"] = fl;
  }
  rep.metadata()["method"] = f.method;
  rep.metadata()["model"] = "free symbols phi1, phi2 with s* s = 1";
  rep.metadata()["transfer_candidates"] = "phi words of length <= 2 tensored with 1 and u";
  emit(f, rep.to_json());
  return rep.pass() ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hopfglue: exact verification of piecewise principal comodule algebras"};
  app.require_subcommand(1);
  Flags flags;
  std::string report_path;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--in", flags.in, "problem bundle (JSON)");
    if (needs_input) in->required();
    sub->add_option("--out", flags.out, "report path (default: stdout)");
    sub->add_option("--cap", flags.cap, "lattice closure cap");
    sub->add_option("--piece", flags.piece, "piece index");
    sub->add_option("--order", flags.order, "comma-separated piece order starting at --piece");
  };

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const Flags&);
  };
  const Cmd cmds[] = {
      {"check-covering", "check that the maps form a covering", check_covering_cmd},
      {"check-cocycle", "check the cocycle conditions of the canonical gluing", check_cocycle_cmd},
      {"build-pullback", "build the multi-pullback and its isomorphism with P", build_pullback_cmd},
      {"partition-basis", "partitioned basis for the kernel family", partition_basis_cmd},
      {"build-splitting", "global colinear unital splittings of the covering maps", build_splitting_cmd},
      {"synthesize-connection", "glue a strong connection from the piece connections", synthesize_cmd},
      {"verify-connection", "verify the bundle's connection, or the synthesized one if it has none", verify_cmd},
      {"chern-galois", "projector of the connection at the bundle's group-like", chern_galois_cmd},
  };
  int (*selected)(const Flags&) = nullptr;
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub, true);
    sub->callback([&selected, run = c.run] { selected = run; });
  }
  CLI::App* ex = app.add_subcommand("example-s2rt", "reproduce the quantum-sphere example symbolically");
  common(ex, false);
  ex->add_option("--method", flags.method, "1, 2 or both");
  ex->add_option("--report", report_path, "report path (same as --out)");
  ex->add_option("--expect", flags.expect, "file with the expected serialized Method I output");
  ex->add_option("--cutoff", flags.cutoff, "shift representation cutoff (>= 4)");
  ex->callback([&] { selected = example_cmd; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }
  if (!report_path.empty()) flags.out = report_path;

  try {
    return selected(flags);
  } catch (const Error& e) {
    std::cerr << "hopfglue: " << kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    std::cerr << "hopfglue: schema: " << e.what() << "\n";
    return bad_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hopfglue: schema: " << e.what() << "\n";
    return bad_input;
  }
}
