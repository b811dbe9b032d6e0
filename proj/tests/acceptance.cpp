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

// Acceptance run: one PASS/FAIL line per criterion with its wall time.
// Usage: acceptance <hopfglue executable> <data directory> <scratch directory>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "hopfglue/freestar.hpp"
#include "hopfglue/instances.hpp"
#include "hopfglue/splitting.hpp"
#include "oracle_pointwise.hpp"

using namespace hopfglue;
namespace fs = hopfglue::freestar;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  bool ok() const { return failed_.empty(); }
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

oracle::Fn values(const Vec& v) { return oracle::Fn(v.begin(), v.end()); }

oracle::Fn2 oracle_tensor(const StrongConnection::Terms& t, const Mat& to_points) {
  std::vector<std::pair<oracle::Fn, oracle::Fn>> legs;
  for (const auto& [l, r] : t) legs.emplace_back(values(to_points * l), values(to_points * r));
  return oracle::outer_sum(legs, to_points.rows());
}

oracle::Verdict oracle_verdict(const StrongConnection& ell, const Mat& to_points) {
  const std::size_t n = to_points.rows();
  return oracle::check_axioms(oracle_tensor(ell.terms(0), to_points), oracle_tensor(ell.terms(1), to_points), n);
}

void axiom_suite(Checks& c) {
  const OrbitInstance e1 = e1_instance();
  for (std::size_t i = 0; i < 3; ++i) {
    const StrongConnection& ell = e1.connections[i];
    c.expect(verify_connection(ell).pass(), "piece connection " + std::to_string(i) + " rejected");
    c.expect(oracle_verdict(ell, Mat::identity(ell.target().dim())).pass(), "oracle rejects piece " + std::to_string(i));
  }
  const Vec one = e1.total->algebra().unit();
  ConnectionReport r = verify_connection(StrongConnection(e1.total, {{{one, one}}, {{one, one}}}));
  bool witness = false;
  for (const auto& f : r.failures)
    witness = witness || (f.axiom == "right-colinearity" && f.basis_index == 1 && !f.residual.is_zero());
  c.expect(!r.pass() && !r.right_colinear && witness, "l(u) = 1 (x) 1 lacks a right-colinearity witness");
}

void synthesis(Checks& c) {
  const OrbitInstance e1 = e1_instance();
  CoveringPipeline p = build_covering_pipeline(e1.covering, e1.connections);
  Synthesis syn(p.pieces, p.pullback.comodule, p.projections);
  const StrongConnection ell = syn.connection();
  ConnectionReport r = verify_connection(ell);
  c.expect(r.unital && r.collapse && r.right_colinear && r.left_colinear, "synthesized connection fails an axiom");
  c.expect(syn.check_proof_identities().pass(), "proof identities");
  const auto& H = z2_grouplikes();
  c.expect(syn.theta(0, H[0]).is_zero() && syn.theta(1, H[0]).is_zero() && syn.theta(2, H[0]).is_zero(),
           "theta_i(1) != 0");
  for (const Vec& h : H) {
    c.expect(syn.T(0, h).is_zero(), "T_0(h) != 0");
    for (std::size_t j = 0; j <= 3; ++j)
      for (std::size_t i = j; i < 3; ++i) c.expect((p.projections[i] * syn.T(j, h)).is_zero(), "pi_i(T_j(h)) != 0");
  }
  const Mat back = *inverse(p.to_pullback);
  std::vector<oracle::Fn> gammas;
  for (std::size_t i = 0; i < 3; ++i) gammas.push_back(values(back * p.pieces[i].alpha.apply(e1.taus[i])));
  oracle::Piecewise pw = oracle::piecewise(gammas);
  c.expect(oracle_tensor(ell.terms(1), back) == oracle::outer_sum(pw.terms, 6), "l(u) differs from the pointwise model");
  c.expect(oracle_verdict(ell, back).pass(), "oracle rejects the synthesized connection");
}

Subspace random_coordinate_subspace(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution pick(0.5);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    if (pick(rng)) gens.push_back(Vec::unit(n, i));
  return Subspace::span(n, gens);
}

void partition_property(Checks& c) {
  std::mt19937 rng(20240611);
  constexpr std::size_t n = 8;
  std::uniform_int_distribution<std::size_t> members(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Subspace> ms;
    for (std::size_t i = 0, m = members(rng); i < m; ++i) ms.push_back(random_coordinate_subspace(rng, n));
    SubspaceFamily f(n, ms);
    PartitionedBasis b = partitioned_basis(f);
    c.expect(verify_partition_property(f, b), "partition property, trial " + std::to_string(trial));
    const IndexMask full = (IndexMask{1} << f.size()) - 1;
    for (IndexMask g = 0; g <= full; ++g) {
      std::vector<Vec> gens;
      for (IndexMask s = 0; s <= full; ++s)
        if ((s & g) == g) gens.insert(gens.end(), b.block(s).begin(), b.block(s).end());
      c.expect(Subspace::span(n, gens) == family_intersection(f, g), "A_Gamma mismatch, trial " + std::to_string(trial));
    }
  }
  std::vector<Vec> x{Vec{1, 0}}, y{Vec{0, 1}}, d{Vec{1, 1}};
  SubspaceFamily lines(2, {Subspace::span(2, x), Subspace::span(2, y), Subspace::span(2, d)});
  c.expect(!is_distributive(lattice_closure(lines)), "three lines reported distributive");
}

void global_splittings(Checks& c) {
  const OrbitInstance e1 = e1_instance();
  GluingFamily g = canonical_gluing(e1.covering);
  MultiPullback m = multipullback(g);
  std::vector<std::optional<StrongConnection>> conns(e1.connections.begin(), e1.connections.end());
  GluingSplittings gs = gluing_splittings(g, conns);
  c.expect(!find_kernel_condition_violation(g, gs.alphas), "entry kernel condition");
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) others.push_back(j);
    for (bool reversed : {false, true}) {
      std::vector<std::size_t> kappa{i, others[reversed ? 1 : 0], others[reversed ? 0 : 1]};
      Splitting s = global_splitting(m, gs.alphas, gs.betas, i, kappa);
      const std::string tag = "piece " + std::to_string(i) + (reversed ? " descending" : " ascending");
      bool section = true;
      for (const Vec& v : s.section.domain().basis()) section = section && s.pi * s.apply(v) == v;
      c.expect(section, tag + ": pi alpha != id");
      c.expect(s.apply(g.component_coaction(i)->algebra().unit()) == m.algebra()->unit(), tag + ": alpha(1) != 1");
      c.expect(is_colinear(s.section, *g.component_coaction(i), *m.comodule), tag + ": not colinear");
    }
  }
  SplittingTable bad = gs.alphas;
  bad.at({0, 1}) = gs.betas.at({0, 1});
  c.expect(find_kernel_condition_violation(g, bad).has_value(), "violating alpha not detected");
  bool rejected = false;
  try {
    global_splitting(m, bad, gs.betas, 0, {0, 1, 2});
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::precondition;
  }
  c.expect(rejected, "violating alpha accepted");
}

void cocycle_and_covering(Checks& c) {
  const OrbitInstance e1 = e1_instance();
  c.expect(check_cocycle(canonical_gluing(e1.covering)).pass, "canonical gluing of E1");
  const OrbitInstance e3 = e3_instance();
  CocycleReport bad = check_cocycle(swap_perturbed(canonical_gluing(e3.covering), e3, 0, 1, 3));
  bool witness = false;
  for (const auto& f : bad.failures) witness = witness || (f.condition == 2 && !f.witness.is_zero());
  c.expect(!bad.pass && witness, "perturbed family lacks a condition (2) witness triple");
  c.expect(check_covering(e1.covering).pass(), "E1 covering");
  CoveringReport dup = check_covering(duplicated_kernel_covering(e1));
  c.expect(!dup.trivial_intersection && !dup.intersection_witness.is_zero(), "duplicated kernels accepted");
}

void symbolic(Checks& c) {
  fs::MethodOneResult m1 = fs::method_one();
  c.expect(fs::to_json(m1.ell).dump() == fs::to_json(fs::reference_method_one()).dump(), "Method I final formula");
  c.expect(fs::to_json(m1.ell01).dump() == fs::to_json(fs::reference_method_one_partial()).dump(), "Method I intermediate formula");
  fs::MethodTwoResult m2 = fs::method_two();
  c.expect(fs::to_json(m2.ell).dump() == fs::to_json(fs::reference_method_two()).dump(), "Method II formula");
  for (const fs::SymConnection* ell : {&m1.ell, &m2.ell}) {
    c.expect(fs::verify_symbolic(*ell).pass(), "verify_symbolic");
    c.expect(fs::leg_collapse(*ell) == fs::SymElem::unit(fs::all_slots), "sum l_i r_i != 1");
    c.expect(fs::legs_independent(*ell), "dependent legs");
    fs::SymProjector p = fs::projector(*ell);
    c.expect(p.idempotent && p.degree_zero, "projector");
  }
  fs::ShiftReport s = fs::verify_En(16);
  c.expect(s.pass() && s.pairs_checked == 14 * 16, "shift representation");
}

void glue_two_pieces(Checks& c) {
  const OrbitInstance two = sub_instance(e1_instance(), {0, 1});
  GluingFamily g = canonical_gluing(two.covering);
  MultiPullback fp = multipullback(g);
  const ComoduleAlgebra& a = *two.covering.pieces[0];
  const ComoduleAlgebra& b = *two.covering.pieces[1];
  const Mat& p01 = g.map(0, 1).matrix();
  const Mat& p10 = g.map(1, 0).matrix();
  SubspaceMap f01 = build_transfer(a, b, p01, p10, z2_grouplikes());
  SubspaceMap f10 = build_transfer(b, a, p10, p01, z2_grouplikes());
  for (std::size_t e = 0; e < a.dim(); ++e)
    c.expect((p10 * f01.apply(Vec::unit(a.dim(), e)) - p01 * Vec::unit(a.dim(), e)).is_zero(), "f01 residual");
  for (std::size_t e = 0; e < b.dim(); ++e)
    c.expect((p01 * f10.apply(Vec::unit(b.dim(), e)) - p10 * Vec::unit(b.dim(), e)).is_zero(), "f10 residual");
  StrongConnection ell = glue_two(fp, two.connections[0], two.connections[1], f01, f10);
  c.expect(verify_connection(ell).pass(), "glued connection fails an axiom");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(Checks& c, const std::string& cli, const std::filesystem::path& data,
                 const std::filesystem::path& scratch) {
  const std::vector<std::string> stages{"check-covering",        "check-cocycle",       "build-pullback",
                                        "partition-basis",       "build-splitting",     "synthesize-connection",
                                        "verify-connection",     "chern-galois"};
  std::filesystem::create_directories(scratch);
  for (const auto& stage : stages) {
    std::string reports[2];
    for (int run = 0; run < 2; ++run) {
      const auto out = scratch / (stage + "." + std::to_string(run) + ".json");
      const std::string cmd = "\"" + cli + "\" " + stage + " --in \"" + (data / "e1.json").string() + "\" --out \"" +
                              out.string() + "\"";
      c.expect(std::system(cmd.c_str()) == 0, stage + " exited nonzero");
      reports[run] = slurp(out);
    }
    c.expect(!reports[0].empty() && reports[0] == reports[1], stage + " reports differ");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <hopfglue> <data dir> <scratch dir>\n";
    return 2;
  }
  struct Criterion {
    int number;
    double budget_seconds;  // 0 = no budget
    std::function<void(Checks&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, 1.0, axiom_suite},
      {2, 5.0, synthesis},
      {3, 30.0, partition_property},
      {4, 0.0, global_splittings},
      {5, 0.0, cocycle_and_covering},
      {6, 10.0, symbolic},
      {7, 0.0, glue_two_pieces},
      {8, 0.0, [&](Checks& c) { determinism(c, argv[1], argv[2], argv[3]); }},
  };
  int failures = 0;
  for (const auto& crit : criteria) {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (crit.budget_seconds > 0) c.expect(secs < crit.budget_seconds, "over the time budget");
    std::cout << "criterion " << crit.number << ": " << (c.ok() ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(3) << secs << " s)\n";
    for (const auto& f : c.failed()) std::cout << "    " << f << '\n';
    if (!c.ok()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
