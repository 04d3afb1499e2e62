#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symrig/graph.hpp"
#include "symrig/kernels.hpp"
#include "symrig/symmetry_group.hpp"

namespace symrig {

inline constexpr std::size_t kTypeExplosionGuard = 100000;

// A type: one automorphism of G per group element, indexed like the group.
// Phi(Id) need not be the identity.
struct TypeAssignment {
  std::vector<Permutation> images;

  const Permutation& operator()(int x) const { return images[static_cast<std::size_t>(x)]; }
  int size() const { return static_cast<int>(images.size()); }
  bool normalized() const { return !images.empty() && images.front().is_identity(); }

  friend bool operator==(const TypeAssignment&, const TypeAssignment&) = default;
  friend auto operator<=>(const TypeAssignment&, const TypeAssignment&) = default;
};

// Every valid type of one fixed realization. valid_sets[x] is the coset
// base(x) Aut(G,p), sorted.
struct TypeCatalog {
  TypeAssignment base;
  std::vector<Permutation> aut_gp;
  std::vector<std::vector<Permutation>> valid_sets;

  // Number of types; `normalized` pins Phi(Id) = id.
  std::size_t count(bool normalized) const;
  // The index-th type in mixed-radix order (element 0 most significant).
  TypeAssignment type_at(std::size_t index, bool normalized) const;
};

struct TypeEnumeration {
  TypeCatalog catalog;
  std::vector<TypeAssignment> types;
};

// Validates sizes and that every image is an automorphism; throws
// DimensionMismatch / LengthMismatch / NotAnAutomorphism.
void check_type_shape(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi);

bool verify_type(const Graph& g, const Coordinates& p, const SymmetryGroup& s, const TypeAssignment& phi,
                 double tol = kDefaultCoincidenceTol);

// Per element, the lexicographically first automorphism realizing it.
std::optional<TypeAssignment> find_base_type(const Graph& g, const Coordinates& p, const SymmetryGroup& s,
                                             double tol = kDefaultCoincidenceTol,
                                             int cap = kDefaultAutomorphismCap);

TypeCatalog type_catalog(const Graph& g, const Coordinates& p, const SymmetryGroup& s,
                         double tol = kDefaultCoincidenceTol, int cap = kDefaultAutomorphismCap);

TypeEnumeration enumerate_types(const Graph& g, const Coordinates& p, const SymmetryGroup& s,
                                double tol = kDefaultCoincidenceTol, bool normalized = false,
                                std::size_t guard = kTypeExplosionGuard);

bool is_homomorphism(const SymmetryGroup& s, const TypeAssignment& phi);

std::optional<TypeAssignment> find_homomorphic_type(const Graph& g, const Coordinates& p,
                                                    const SymmetryGroup& s,
                                                    double tol = kDefaultCoincidenceTol,
                                                    Execution exec = Execution::Parallel,
                                                    std::size_t guard = kTypeExplosionGuard);

// Phi restricted to a subgroup; elements matched by matrix.
TypeAssignment restrict_type(const SymmetryGroup& s, const TypeAssignment& phi, const SymmetryGroup& sub);

// {label: cycles} rendering used by reports, e.g. s -> "(v1 v2)(v5 v6)".
std::vector<std::pair<std::string, std::string>> describe_type(const Graph& g, const SymmetryGroup& s,
                                                               const TypeAssignment& phi,
                                                               bool include_fixed = false);

}  // namespace symrig
