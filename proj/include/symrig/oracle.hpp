#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "symrig/classification.hpp"
#include "symrig/graph.hpp"
#include "symrig/symmetry_group.hpp"

// Brute-force cross-checks for the test suite. They share no search or
// factorization code with the main library paths they are compared against.
namespace symrig::oracle {

inline constexpr int kMaxBruteForceVertices = 9;
inline constexpr int kMaxBruteForceGroupOrder = 6;
inline constexpr int kMaxMinorVertices = 4;
inline constexpr int kDefaultEvaluations = 8;
inline constexpr double kMinorTol = 1e-9;
inline constexpr long long kMaxDenominator = 1000;
inline constexpr double kRationalTol = 1e-9;

// Every type of (G, p) under S, found by scanning all n! vertex permutations
// for automorphisms and testing each against each group element. The result
// is the Cartesian product of the per-element valid sets, sorted.
// Throws CapExceeded when n > 9 or |S| > 6.
std::vector<TypeAssignment> brute_force_type_search(const Graph& g, const Coordinates& p, const SymmetryGroup& s,
                                                    double tol = kDefaultCoincidenceTol);

// Checks that every square minor of R(K_n, p) vanishing at p (|det| <= tol
// after unit-box scaling) also vanishes at `evals` random points of U, the
// configuration space of (K_n, S, Phi). `p` must lie in U.
// Throws CapExceeded unless n <= 4 and d = 2.
bool exhaustive_generic_check(const Coordinates& p, const SymmetryGroup& s, const TypeAssignment& phi,
                              int evals = kDefaultEvaluations, double tol = kMinorTol, std::uint64_t seed = 0);

// Nullity of m by fraction-free elimination over the integers. Entries are
// snapped to the nearest rational with denominator <= 1000; an entry with no
// such rational within 1e-9 raises NotRationalizable.
int kernel_oracle(const Eigen::MatrixXd& m);

}  // namespace symrig::oracle
