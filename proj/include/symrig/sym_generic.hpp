#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "symrig/classification.hpp"
#include "symrig/graph.hpp"
#include "symrig/kernels.hpp"
#include "symrig/rigidity.hpp"
#include "symrig/symmetry_group.hpp"

namespace symrig {

inline constexpr int kDefaultRetries = 100;
inline constexpr int kDefaultTrials = 20;

// Orthonormal basis (columns, dn x k) of U, the configurations p in R^{dn}
// with M^(x) p = P_Phi(x) p for every x.
struct ConfigSpaceBasis {
  int dim = 0;
  int vertex_count = 0;
  Eigen::MatrixXd basis;

  int k() const { return static_cast<int>(basis.cols()); }
};

// n copies of M_x on the block diagonal.
Eigen::MatrixXd block_operator(const Eigen::MatrixXd& mx, int n);
// Permutation matrix of sigma with every entry blown up to a d x d block:
// block row v holds I_d in block column sigma(v).
Eigen::MatrixXd permutation_operator(const Permutation& sigma, int d);

// Stacked M^(x) - P_Phi(x) over the non-identity elements, plus the identity
// block when Phi(Id) != id.
Eigen::MatrixXd symmetry_constraint_matrix(const SymmetryGroup& s, const TypeAssignment& phi, int n);

ConfigSpaceBasis config_space_basis(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi);

// max over x in S of |(M^(x) - P_Phi(x)) p| for a flat configuration.
double configuration_residual(const Eigen::VectorXd& p, const SymmetryGroup& s, const TypeAssignment& phi);
// max over x and basis columns u_j.
double basis_residual(const ConfigSpaceBasis& b, const SymmetryGroup& s, const TypeAssignment& phi);

struct EmptinessReport {
  bool empty = false;
  std::vector<Edge> edges;  // bars forced to zero length on all of U
};

EmptinessReport class_is_empty(const Graph& g, const ConfigSpaceBasis& b, double tol = kDefaultKernelTol);

// Draws t uniformly from [-1,1]^k, sets p = sum t_j u_j and scales it to the
// unit box. Redraws on bar coincidence, up to `retries` times.
Framework sample_config(const Graph& g, const ConfigSpaceBasis& b, std::uint64_t seed,
                        int retries = kDefaultRetries, double framework_tol = kDefaultCoincidenceTol);

struct OrbitStructure {
  std::vector<std::vector<int>> orbits;       // sorted, ordered by representative
  std::vector<int> representatives;           // lowest index per orbit
  std::vector<LinearSubspace> fixed_spaces;   // F(v_i): common fixed space of the stabilizer
};

// Requires Phi to be a homomorphism (NotAHomomorphism otherwise).
OrbitStructure orbit_structure(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi);

// Representatives drawn uniformly from the unit ball of F(v_i); the rest
// placed by p(Phi(x) v_i) = M_x p(v_i).
Framework orbit_sample(const Graph& g, const OrbitStructure& os, const SymmetryGroup& s,
                       const TypeAssignment& phi, std::uint64_t seed, int retries = kDefaultRetries,
                       double framework_tol = kDefaultCoincidenceTol);

// Seed of the trial-th sample drawn from a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct TrialOutcome {
  Coordinates coords;
  RigidityReport report;
};

// Draws `count` samples of the class and runs the rigidity verdict on each.
// Trial i uses trial_seed(seed, i), so results do not depend on `exec`.
std::vector<TrialOutcome> run_trials(const Graph& g, const ConfigSpaceBasis& b, int count, std::uint64_t seed,
                                     const RigidityOptions& rigidity, int retries, Execution exec);

struct SymGenericOptions {
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  int retries = kDefaultRetries;
  RigidityOptions rigidity;
  Execution exec = Execution::Parallel;
};

struct SymGenericReport {
  int k = 0;
  bool empty = false;
  std::vector<Edge> offending_edges;
  int samples_drawn = 0;
  int max_rank = 0;
  int expected_rank = 0;
  std::vector<int> ranks;
  // Positive verdicts are certified by a witness; negatives only mean no
  // witness turned up in `samples_drawn` trials.
  bool rigid = false;
  bool independent = false;
  bool isostatic = false;
  std::optional<Coordinates> witness;
  int witness_trial = -1;
  RigidityReport witness_report;
};

SymGenericReport sym_generic_verdict(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi,
                                     const SymGenericOptions& opts = {});

}  // namespace symrig
