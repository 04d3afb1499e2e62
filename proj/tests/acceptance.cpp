// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "symrig/error.hpp"
#include "symrig/oracle.hpp"
#include "symrig/sym_generic.hpp"

using namespace symrig;

namespace {

constexpr int kSamples = 100;
constexpr std::uint64_t kSeed = 2024;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

struct Loaded {
  Problem problem;
  TypeAssignment type;
  ConfigSpaceBasis basis;
};

Loaded load(const std::string& name) {
  Problem p = testing::fixture(name);
  TypeAssignment phi = testing::fixture_type(p);
  ConfigSpaceBasis b = config_space_basis(p.graph, p.group, phi);
  return {std::move(p), std::move(phi), std::move(b)};
}

std::vector<TrialOutcome> samples(const Loaded& l, int count = kSamples, std::uint64_t seed = kSeed) {
  return run_trials(l.problem.graph, l.basis, count, seed, {}, kDefaultRetries, Execution::Parallel);
}

SymGenericReport verdict(const Loaded& l, int trials = kDefaultTrials) {
  SymGenericOptions opts;
  opts.trials = trials;
  opts.seed = kSeed;
  return sym_generic_verdict(l.problem.graph, l.problem.group, l.type, opts);
}

int max_rank(const std::vector<TrialOutcome>& t) {
  int best = 0;
  for (const auto& o : t) best = std::max(best, o.report.rank);
  return best;
}

void criterion1(Check& c) {
  const auto l = load("k33_phi_a");
  const auto t = samples(l);
  const auto good = std::count_if(t.begin(), t.end(), [](const auto& o) { return o.report.rank == 9 && o.report.isostatic; });
  c.expect(good >= 99, "only " + std::to_string(good) + "/100 samples isostatic with rank 9");
  c.expect(verdict(l).isostatic, "no isostatic witness");
}

void criterion2(Check& c) {
  const auto l = load("k33_phi_b");
  for (const auto& o : samples(l)) {
    c.expect(o.report.rank <= 8 && !o.report.infinitesimally_rigid, "a sample reached rank " + std::to_string(o.report.rank));
  }
}

void criterion3(Check& c) {
  const auto a = verdict(load("gtp_psi_a"));
  c.expect(a.isostatic && a.witness_report.rank == 9, "no rank-9 isostatic witness for the first type");
  for (const auto& o : samples(load("gtp_psi_b"))) c.expect(o.report.rank <= 8, "second type sample above rank 8");
}

void criterion4(Check& c) {
  const auto a = verdict(load("k4_upsilon_a"));
  c.expect(a.isostatic && a.witness_report.rank == 6, "no rank-6 isostatic witness");
  for (const auto& o : samples(load("k4_upsilon_b"))) {
    c.expect(o.report.rank <= 5 && o.report.affine_span_dim == 2, "planar class sample not of rank <= 5 and span 2");
  }
}

void criterion5(Check& c) {
  for (const auto& o : samples(load("k3_c2_swap"))) {
    c.expect(o.report.affine_span_dim <= 1 && o.report.rank == 2, "a triangle sample was not degenerate of rank 2");
  }
}

void criterion6(Check& c) {
  const std::vector<Edge> bar{{0, 1}};
  const auto id = load("k2_c2_identity");
  const auto rep = class_is_empty(id.problem.graph, id.basis);
  c.expect(rep.empty && rep.edges == bar, "K2 with the identity half-turn type not empty on {v1,v2}");

  const auto c3 = schoenflies_group("C3", 2);
  const Graph k2 = Graph::complete(2);
  const Permutation e = Permutation::identity(2), s({1, 0});
  for (const auto& x : {e, s}) {
    for (const auto& y : {e, s}) {
      const auto r = class_is_empty(k2, config_space_basis(k2, c3, TypeAssignment{{e, x, y}}));
      c.expect(r.empty && r.edges == bar, "a threefold-rotation map of K2 is not empty");
    }
  }
  const auto a = load("k33_phi_a");
  c.expect(!class_is_empty(a.problem.graph, a.basis).empty, "K3,3 mirror class reported empty");
}

void criterion7(Check& c) {
  const auto l = load("gt_c2");
  const auto& p = l.problem;
  const auto en = enumerate_types(p.graph, *p.coords, p.group, kDefaultCoincidenceTol, true);
  std::set<std::string> images;
  for (const auto& t : en.types) images.insert(t(1).to_cycles(p.graph.labels(), true));
  c.expect(images == std::set<std::string>{"(v1 v2)(v3)(v4)", "(v1 v2)(v3 v4)"}, "normalized types differ");
  c.expect(en.catalog.aut_gp.size() == 2, "|Aut(G_t,p)| != 2");
  for (const auto& name : testing::fixture_names()) {
    const Problem f = testing::fixture(name);
    if (!f.coords) continue;
    const auto mine = enumerate_types(f.graph, *f.coords, f.group).types;
    const auto brute = oracle::brute_force_type_search(f.graph, *f.coords, f.group);
    c.expect(std::set<TypeAssignment>(mine.begin(), mine.end()) == std::set<TypeAssignment>(brute.begin(), brute.end()),
             "enumeration differs from brute force on " + name);
  }
}

void criterion8(Check& c) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = testing::random_free_orbit_instance(1000 + seed);
    const auto en = enumerate_types(inst.graph, inst.coords, inst.group);
    c.expect(en.types.size() == 1, "injective instance with several types");
    c.expect(!en.types.empty() && is_homomorphism(inst.group, en.types.front()), "unique type not a homomorphism");
  }
  for (const char* name : {"c9_c3", "c4_gadget"}) {
    const Problem p = testing::fixture(name);
    c.expect(!find_homomorphic_type(p.graph, *p.coords, p.group), std::string("homomorphism found for ") + name);
    bool any = false;
    for (const auto& t : oracle::brute_force_type_search(p.graph, *p.coords, p.group)) any = any || is_homomorphism(p.group, t);
    c.expect(!any, std::string("oracle found a homomorphism for ") + name);
  }
}

void criterion9(Check& c) {
  for (const auto& name : testing::fixture_names()) {
    const auto l = load(name);
    c.expect(basis_residual(l.basis, l.problem.group, l.type) <= 1e-9, "basis residual too large on " + name);
    try {
      const int exact = oracle::kernel_oracle(
          symmetry_constraint_matrix(l.problem.group, l.type, l.problem.graph.vertex_count()));
      c.expect(exact == l.basis.k(), "exact nullity differs on " + name);
    } catch (const Error& e) {
      c.expect(e.code() == ErrorCode::NotRationalizable, "oracle failed on " + name);
    }
  }
  c.expect(load("k33_phi_a").basis.k() == 6, "K3,3 mirror class dimension is not 6");
}

void criterion10(Check& c) {
  const auto l = load("k33_c2v");
  GroupParams mirror;
  mirror.mirror_angle = std::numbers::pi / 2;
  const auto cs = schoenflies_group("Cs", 2, mirror);
  const auto sub_phi = restrict_type(l.problem.group, l.type, cs);
  const auto sub = config_space_basis(l.problem.graph, cs, sub_phi);
  for (int j = 0; j < l.basis.k(); ++j) {
    c.expect(configuration_residual(l.basis.basis.col(j), cs, sub_phi) <= 1e-9, "U(C2v) not inside U(Cs)");
  }
  const int big = max_rank(samples(l, 20));
  const int small = max_rank(run_trials(l.problem.graph, sub, 20, kSeed, {}, kDefaultRetries, Execution::Parallel));
  c.expect(big <= small, "subgroup sampled rank smaller than full-group rank");
}

void criterion11(Check& c) {
  for (int m = 2; m <= 8; ++m) {
    for (int dim : {2, 3}) {
      const auto cm = schoenflies_group("C" + std::to_string(m), dim);
      const auto cmv = schoenflies_group("C" + std::to_string(m) + "v", dim);
      c.expect(cm.order() == m && cmv.order() == 2 * m, "cyclic or pyramidal order wrong for m=" + std::to_string(m));
      c.expect(!validate_group(cm) && !validate_group(cmv), "invalid cyclic group");
    }
  }
  for (const auto& [name, order] : std::vector<std::pair<std::string, int>>{{"Td", 24}, {"Oh", 48}, {"Ih", 120}}) {
    const auto g = schoenflies_group(name, 3);
    c.expect(g.order() == order, name + " has order " + std::to_string(g.order()));
    c.expect(!validate_group(g), name + " fails validation");
  }
}

void criterion12(Check& c) {
  const auto c1 = schoenflies_group("C1", 2);
  const TypeAssignment id{{Permutation::identity(3)}};
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 10; ++i) {
    c.expect(oracle::exhaustive_generic_check(testing::random_coords(2, 3, rng), c1, id), "random triangle not generic");
  }
  Coordinates collinear(2, 3);
  collinear << 1, -1, 0, 0, 0, 0;
  c.expect(!oracle::exhaustive_generic_check(collinear, c1, id), "collinear triangle declared generic");
  const auto l = load("k3_c2_swap");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Framework f = sample_config(l.problem.graph, l.basis, seed);
    c.expect(oracle::exhaustive_generic_check(f.coords, l.problem.group, l.type), "half-turn class sample not generic");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"K3,3 mirror type a: isostatic in >= 99/100 samples, certified", criterion1},
      {"K3,3 mirror type b: all 100 samples flexible, rank <= 8", criterion2},
      {"prism half-turn: type a isostatic witness, type b rank <= 8", criterion3},
      {"K4 mirror in 3D: type a rank-6 witness, type b planar rank <= 5", criterion4},
      {"K3 half-turn swap: collinear samples of rank 2", criterion5},
      {"emptiness of the K2 classes, K3,3 class non-empty", criterion6},
      {"type enumeration on G_t and oracle agreement", criterion7},
      {"homomorphism suite and no-homomorphism constructions", criterion8},
      {"basis residuals and exact kernel agreement", criterion9},
      {"subgroup monotonicity C2v to Cs", criterion10},
      {"group catalog orders and validation", criterion11},
      {"minor-based genericity oracle on triangles", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!c.ok) std::cout << " (" << c.why.str() << ")";
    std::cout << '\n';
    failed += c.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
