#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "symrig/error.hpp"
#include "symrig/oracle.hpp"
#include "symrig/sym_generic.hpp"

using namespace symrig;

namespace {

int max_rank(const std::vector<TrialOutcome>& trials) {
  int best = 0;
  for (const auto& t : trials) best = std::max(best, t.report.rank);
  return best;
}

std::vector<std::string> nonempty_fixtures() {
  std::vector<std::string> out;
  for (const auto& name : testing::fixture_names()) {
    const Problem p = testing::fixture(name);
    const auto b = config_space_basis(p.graph, p.group, testing::fixture_type(p));
    if (!class_is_empty(p.graph, b).empty) out.push_back(name);
  }
  return out;
}

TypeAssignment single(const Permutation& img) { return {{Permutation::identity(img.size()), img}}; }

}  // namespace

TEST_CASE("configuration space dimensions") {
  const auto c2 = schoenflies_group("C2", 2);
  const Graph k2 = Graph::complete(2);
  CHECK(config_space_basis(k2, c2, single(Permutation::identity(2))).k() == 0);
  CHECK(config_space_basis(k2, c2, single(Permutation({1, 0}))).k() == 2);

  const Problem a = testing::fixture("k33_phi_a");
  const auto phi = testing::fixture_type(a);
  CHECK(config_space_basis(a.graph, a.group, phi).k() == 6);
  CHECK(oracle::kernel_oracle(symmetry_constraint_matrix(a.group, phi, 6)) == 6);

  const auto c1 = schoenflies_group("C1", 3);
  const TypeAssignment id{{Permutation::identity(5)}};
  CHECK(config_space_basis(Graph::complete(5), c1, id).k() == 15);
}

TEST_CASE("basis invariants on every fixture") {
  for (const auto& name : testing::fixture_names()) {
    CAPTURE(name);
    const Problem p = testing::fixture(name);
    const auto phi = testing::fixture_type(p);
    const auto b = config_space_basis(p.graph, p.group, phi);
    CHECK(basis_residual(b, p.group, phi) <= 1e-9);
    if (b.k() > 0) {
      const Eigen::MatrixXd gram = b.basis.transpose() * b.basis;
      CHECK((gram - Eigen::MatrixXd::Identity(b.k(), b.k())).cwiseAbs().maxCoeff() <= 1e-12);
    }
    if (p.coords) {
      // The fixture's own coordinates lie in U.
      const Eigen::VectorXd c = flat(*p.coords);
      CHECK((c - b.basis * (b.basis.transpose() * c)).norm() <= 1e-9);
    }
  }
}

TEST_CASE("identity block is included only when Phi(Id) is not id") {
  const auto c2 = schoenflies_group("C2", 2);
  const Graph g(3, {{0, 1}});
  TypeAssignment plain = single(Permutation({1, 0, 2}));
  CHECK(symmetry_constraint_matrix(c2, plain, 3).rows() == 6);
  TypeAssignment shifted = plain;
  shifted.images[0] = Permutation({0, 2, 1});
  CHECK(symmetry_constraint_matrix(c2, shifted, 3).rows() == 12);
}

TEST_CASE("emptiness") {
  const Problem id = testing::fixture("k2_c2_identity");
  const auto rep = class_is_empty(id.graph, config_space_basis(id.graph, id.group, testing::fixture_type(id)));
  CHECK(rep.empty);
  CHECK(rep.edges == std::vector<Edge>{{0, 1}});

  const auto c3 = schoenflies_group("C3", 2);
  const Graph k2 = Graph::complete(2);
  const Permutation e = Permutation::identity(2), s({1, 0});
  for (const auto& a : {e, s}) {
    for (const auto& b : {e, s}) {
      const TypeAssignment phi{{e, a, b}};
      CHECK(class_is_empty(k2, config_space_basis(k2, c3, phi)).empty);
    }
  }

  const Problem a = testing::fixture("k33_phi_a");
  CHECK_FALSE(class_is_empty(a.graph, config_space_basis(a.graph, a.group, testing::fixture_type(a))).empty);
}

TEST_CASE("sampling examples") {
  const Problem k3 = testing::fixture("k3_c2_swap");
  const auto b = config_space_basis(k3.graph, k3.group, testing::fixture_type(k3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Framework f = sample_config(k3.graph, b, seed);
    CHECK(f.coords.col(2).norm() <= 1e-12);
    CHECK((f.coords.col(1) + f.coords.col(0)).norm() <= 1e-12);
    CHECK(affine_span_dim(f.coords) <= 1);
    CHECK(f.coords.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
  }

  const Problem k2 = testing::fixture("k2_c2_swap");
  const Framework f2 = sample_config(k2.graph, config_space_basis(k2.graph, k2.group, testing::fixture_type(k2)), 3);
  CHECK((f2.coords.col(0) + f2.coords.col(1)).norm() <= 1e-12);
  CHECK(f2.coords.col(0).norm() > 0.1);

  const auto c2 = schoenflies_group("C2", 2);
  const Graph one(1, {});
  const auto b1 = config_space_basis(one, c2, single(Permutation::identity(1)));
  CHECK(b1.k() == 0);
  CHECK(sample_config(one, b1, 0).coords.isZero());

  const Problem id = testing::fixture("k2_c2_identity");
  const auto b0 = config_space_basis(id.graph, id.group, testing::fixture_type(id));
  try {
    sample_config(id.graph, b0, 1, 5);
    FAIL("expected SamplingExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SamplingExhausted);
  }
}

TEST_CASE("samples stay in the class") {
  for (const auto& name : nonempty_fixtures()) {
    CAPTURE(name);
    const Problem p = testing::fixture(name);
    const auto phi = testing::fixture_type(p);
    const auto b = config_space_basis(p.graph, p.group, phi);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Framework f = sample_config(p.graph, b, seed);
      CHECK(verify_type(p.graph, f.coords, p.group, phi, 1e-8));
    }
    if (is_homomorphism(p.group, phi)) {
      const auto os = orbit_structure(p.graph, p.group, phi);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Framework f = orbit_sample(p.graph, os, p.group, phi, seed);
        CHECK(verify_type(p.graph, f.coords, p.group, phi, 1e-8));
        CHECK(configuration_residual(flat(f.coords), p.group, phi) <= 1e-8);
      }
    }
  }
}

TEST_CASE("orbit structures") {
  const Problem ua = testing::fixture("k4_upsilon_a");
  const auto os = orbit_structure(ua.graph, ua.group, testing::fixture_type(ua));
  REQUIRE(os.orbits.size() == 3);
  CHECK(os.orbits[0] == std::vector<int>{0, 1});
  CHECK(os.orbits[1] == std::vector<int>{2});
  CHECK(os.orbits[2] == std::vector<int>{3});
  CHECK(os.fixed_spaces[0].dim() == 3);
  CHECK(os.fixed_spaces[1].dim() == 2);
  CHECK(os.fixed_spaces[2].dim() == 2);

  const Problem pb = testing::fixture("k33_phi_b");
  const auto osb = orbit_structure(pb.graph, pb.group, testing::fixture_type(pb));
  REQUIRE(osb.orbits.size() == 3);
  for (const auto& f : osb.fixed_spaces) CHECK(f.dim() == 2);

  const auto c1 = schoenflies_group("C1", 2);
  const auto osc = orbit_structure(pb.graph, c1, TypeAssignment{{Permutation::identity(6)}});
  CHECK(osc.orbits.size() == 6);

  const Problem c9 = testing::fixture("c9_c3");
  CHECK_THROWS_AS(orbit_structure(c9.graph, c9.group, testing::fixture_type(c9)), Error);
}

TEST_CASE("orbit samples") {
  const Problem ua = testing::fixture("k4_upsilon_a");
  const auto phi_a = testing::fixture_type(ua);
  const auto os = orbit_structure(ua.graph, ua.group, phi_a);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Framework f = orbit_sample(ua.graph, os, ua.group, phi_a, seed);
    CHECK(std::abs(f.coords(1, 2)) <= 1e-12);
    CHECK(std::abs(f.coords(1, 3)) <= 1e-12);
    CHECK((ua.group.matrix(1) * f.coords.col(0) - f.coords.col(1)).norm() <= 1e-12);
  }
  const Problem ub = testing::fixture("k4_upsilon_b");
  const auto phi_b = testing::fixture_type(ub);
  const Framework fb = orbit_sample(ub.graph, orbit_structure(ub.graph, ub.group, phi_b), ub.group, phi_b, 4);
  CHECK(fb.coords.row(1).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("generic verdict examples") {
  SymGenericOptions opts;
  opts.seed = 17;
  const Problem a = testing::fixture("k33_phi_a");
  const auto ra = sym_generic_verdict(a.graph, a.group, testing::fixture_type(a), opts);
  CHECK(ra.isostatic);
  CHECK(ra.max_rank == 9);
  REQUIRE(ra.witness);
  CHECK(verify_type(a.graph, *ra.witness, a.group, testing::fixture_type(a), 1e-8));

  const Problem b = testing::fixture("k33_phi_b");
  const auto rb = sym_generic_verdict(b.graph, b.group, testing::fixture_type(b), opts);
  CHECK_FALSE(rb.rigid);
  CHECK(rb.max_rank <= 8);
  CHECK(rb.samples_drawn == 20);

  const Problem tb = testing::fixture("gtp_psi_b");
  CHECK_FALSE(sym_generic_verdict(tb.graph, tb.group, testing::fixture_type(tb), opts).isostatic);

  const Problem e = testing::fixture("k2_c2_identity");
  const auto re = sym_generic_verdict(e.graph, e.group, testing::fixture_type(e), opts);
  CHECK(re.empty);
  CHECK(re.offending_edges.size() == 1);
  CHECK(re.samples_drawn == 0);
}

TEST_CASE("trials do not depend on the execution mode") {
  const Problem a = testing::fixture("gtp_psi_a");
  const auto b = config_space_basis(a.graph, a.group, testing::fixture_type(a));
  const auto serial = run_trials(a.graph, b, 24, 5, {}, kDefaultRetries, Execution::Serial);
  const auto parallel = run_trials(a.graph, b, 24, 5, {}, kDefaultRetries, Execution::Parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].coords == parallel[i].coords);
    CHECK(serial[i].report.rank == parallel[i].report.rank);
  }
  CHECK(trial_seed(5, 0) != trial_seed(5, 1));
  CHECK(trial_seed(5, 0) != trial_seed(6, 0));
}

TEST_CASE("rank is constant on nearly every sample") {
  for (const auto& name : nonempty_fixtures()) {
    CAPTURE(name);
    const Problem p = testing::fixture(name);
    const auto b = config_space_basis(p.graph, p.group, testing::fixture_type(p));
    const auto trials = run_trials(p.graph, b, 100, 99, {}, kDefaultRetries, Execution::Parallel);
    const int best = max_rank(trials);
    const auto hits = std::count_if(trials.begin(), trials.end(), [&](const auto& t) { return t.report.rank == best; });
    CHECK(hits >= 99);
    int span = 0;
    for (const auto& t : trials) span = std::max(span, t.report.affine_span_dim);
    if (p.coords) CHECK(span >= affine_span_dim(*p.coords));
  }
}

TEST_CASE("trivial group agrees with plain generic sampling") {
  const auto c1 = schoenflies_group("C1", 2);
  const Problem a = testing::fixture("gtp_psi_a");
  const TypeAssignment id{{Permutation::identity(6)}};
  const auto b = config_space_basis(a.graph, c1, id);
  CHECK(b.k() == 12);
  CHECK(max_rank(run_trials(a.graph, b, 10, 1, {}, kDefaultRetries, Execution::Serial)) == 9);
}

TEST_CASE("sampled ranks do not depend on the basis") {
  std::mt19937_64 rng(77);
  for (const auto& name : nonempty_fixtures()) {
    CAPTURE(name);
    const Problem p = testing::fixture(name);
    const auto b = config_space_basis(p.graph, p.group, testing::fixture_type(p));
    ConfigSpaceBasis shuffled = b;
    std::vector<int> order(static_cast<std::size_t>(b.k()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int j = 0; j < b.k(); ++j) shuffled.basis.col(j) = b.basis.col(order[static_cast<std::size_t>(j)]);
    ConfigSpaceBasis rotated = b;
    rotated.basis = b.basis * testing::random_orthogonal(b.k(), rng);
    const int ref = max_rank(run_trials(p.graph, b, 20, 3, {}, kDefaultRetries, Execution::Parallel));
    CHECK(max_rank(run_trials(p.graph, shuffled, 20, 4, {}, kDefaultRetries, Execution::Parallel)) == ref);
    CHECK(max_rank(run_trials(p.graph, rotated, 20, 5, {}, kDefaultRetries, Execution::Parallel)) == ref);
  }
}

TEST_CASE("subgroup classes contain the full-group class") {
  const Problem v = testing::fixture("k33_c2v");
  const auto phi = testing::fixture_type(v);
  GroupParams mirror;
  mirror.mirror_angle = std::numbers::pi / 2;
  for (const auto& [name, params] : std::vector<std::pair<std::string, GroupParams>>{
           {"Cs", mirror}, {"Cs", {}}, {"C2", {}}}) {
    CAPTURE(name);
    const auto sub = schoenflies_group(name, 2, params);
    const auto sub_phi = restrict_type(v.group, phi, sub);
    const auto big = config_space_basis(v.graph, v.group, phi);
    const auto small = config_space_basis(v.graph, sub, sub_phi);
    CHECK(big.k() <= small.k());
    for (int j = 0; j < big.k(); ++j) CHECK(configuration_residual(big.basis.col(j), sub, sub_phi) <= 1e-9);
    const int r_big = max_rank(run_trials(v.graph, big, 20, 8, {}, kDefaultRetries, Execution::Parallel));
    const int r_small = max_rank(run_trials(v.graph, small, 20, 8, {}, kDefaultRetries, Execution::Parallel));
    CHECK(r_big <= r_small);
  }
}
