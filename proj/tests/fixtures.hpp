#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "symrig/problem.hpp"

namespace symrig::testing {

// Every problem file under fixtures/, by stem name.
std::vector<std::string> fixture_names();
Problem fixture(const std::string& name);

// The explicit type of a fixture (throws if the file has none).
TypeAssignment fixture_type(const Problem& p);

Eigen::MatrixXd random_orthogonal(int d, std::mt19937_64& rng);
Coordinates random_coords(int d, int n, std::mt19937_64& rng);

// A graph whose vertices are r free orbits of S, vertex (i, x) placed at
// M_x q_i, with Phi(y)(i, x) = (i, y x). Edges are random unions of edge
// orbits, so Phi is a homomorphic type by construction.
struct FreeOrbitInstance {
  Graph graph;
  SymmetryGroup group;
  TypeAssignment type;
  Coordinates coords;
};

FreeOrbitInstance random_free_orbit_instance(std::uint64_t seed);

}  // namespace symrig::testing
