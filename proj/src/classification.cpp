#include "symrig/classification.hpp"

#include <algorithm>

#include "symrig/error.hpp"

namespace symrig {

std::size_t TypeCatalog::count(bool normalized) const {
  std::size_t total = 1;
  for (std::size_t x = normalized ? 1 : 0; x < valid_sets.size(); ++x) total *= valid_sets[x].size();
  return total;
}

TypeAssignment TypeCatalog::type_at(std::size_t index, bool normalized) const {
  TypeAssignment out;
  out.images.resize(valid_sets.size());
  for (std::size_t x = valid_sets.size(); x-- > 0;) {
    if (normalized && x == 0) {
      out.images[0] = Permutation::identity(base.images[0].size());
      continue;
    }
    const auto& set = valid_sets[x];
    out.images[x] = set[index % set.size()];
    index /= set.size();
  }
  return out;
}

void check_type_shape(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi) {
  if (phi.size() != s.order()) {
    throw Error(ErrorCode::DimensionMismatch, "type covers " + std::to_string(phi.size()) +
                                                  " elements, group has " + std::to_string(s.order()));
  }
  for (int x = 0; x < s.order(); ++x) {
    if (!is_automorphism(g, phi(x))) {
      throw Error(ErrorCode::NotAnAutomorphism,
                  "image of " + s[x].label + " is not an automorphism: " + phi(x).to_cycles(g.labels()));
    }
  }
}

bool verify_type(const Graph& g, const Coordinates& p, const SymmetryGroup& s, const TypeAssignment& phi,
                 double tol) {
  if (p.rows() != s.dim() || p.cols() != g.vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinates are not d x n for this graph and group");
  }
  check_type_shape(g, s, phi);
  if (!is_framework(g, p, tol)) return false;
  for (int x = 0; x < s.order(); ++x) {
    const Eigen::MatrixXd moved = s.matrix(x) * p;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if ((moved.col(v) - p.col(phi(x)(v))).norm() > tol) return false;
    }
  }
  return true;
}

std::optional<TypeAssignment> find_base_type(const Graph& g, const Coordinates& p, const SymmetryGroup& s,
                                             double tol, int cap) {
  if (p.rows() != s.dim() || p.cols() != g.vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinates are not d x n for this graph and group");
  }
  TypeAssignment out;
  for (int x = 0; x < s.order(); ++x) {
    const Eigen::MatrixXd moved = s.matrix(x) * p;
    // Only the first hit is needed, but the search is tiny at these sizes.
    auto found = search_automorphisms(
        g, [&](int v, int w) { return (moved.col(v) - p.col(w)).norm() <= tol; }, cap);
    if (found.empty()) return std::nullopt;
    out.images.push_back(std::move(found.front()));
  }
  return out;
}

TypeCatalog type_catalog(const Graph& g, const Coordinates& p, const SymmetryGroup& s, double tol, int cap) {
  auto base = find_base_type(g, p, s, tol, cap);
  if (!base) throw Error(ErrorCode::EmptyClass, "realization is not symmetric under the group");
  TypeCatalog cat;
  cat.base = std::move(*base);
  cat.aut_gp = coincidence_automorphisms(g, p, tol, cap);
  for (int x = 0; x < s.order(); ++x) {
    std::vector<Permutation> coset;
    coset.reserve(cat.aut_gp.size());
    for (const auto& beta : cat.aut_gp) coset.push_back(cat.base(x) * beta);
    std::sort(coset.begin(), coset.end());
    cat.valid_sets.push_back(std::move(coset));
  }
  return cat;
}

TypeEnumeration enumerate_types(const Graph& g, const Coordinates& p, const SymmetryGroup& s, double tol,
                                bool normalized, std::size_t guard) {
  TypeEnumeration out{type_catalog(g, p, s, tol), {}};
  // Guard against overflow before multiplying out.
  double estimate = 1.0;
  for (std::size_t x = normalized ? 1 : 0; x < out.catalog.valid_sets.size(); ++x) {
    estimate *= static_cast<double>(out.catalog.valid_sets[x].size());
  }
  if (estimate > static_cast<double>(guard)) {
    throw Error(ErrorCode::ExplosionGuard, "type catalog would list " + std::to_string(estimate) + " maps");
  }
  const std::size_t total = out.catalog.count(normalized);
  out.types.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.types.push_back(out.catalog.type_at(i, normalized));
  return out;
}

bool is_homomorphism(const SymmetryGroup& s, const TypeAssignment& phi) {
  if (phi.size() != s.order()) return false;
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      const int ab = s.product(a, b);
      if (ab < 0) throw Error(ErrorCode::NotClosedWithinBound, "group product table is incomplete");
      if (phi(ab) != phi(a) * phi(b)) return false;
    }
  }
  return true;
}

std::optional<TypeAssignment> find_homomorphic_type(const Graph& g, const Coordinates& p,
                                                    const SymmetryGroup& s, double tol, Execution exec,
                                                    std::size_t guard) {
  const TypeCatalog cat = type_catalog(g, p, s, tol);
  if (cat.aut_gp.size() == 1) return cat.base;  // the unique type is a homomorphism
  // A homomorphism sends Id to id, so only normalized maps need scanning.
  const std::size_t total = cat.count(true);
  if (static_cast<double>(total) > static_cast<double>(guard)) {
    throw Error(ErrorCode::ExplosionGuard, "homomorphism scan over " + std::to_string(total) + " maps");
  }
  const auto hit = first_match(
      total, [&](std::size_t i) { return is_homomorphism(s, cat.type_at(i, true)); }, exec);
  if (!hit) return std::nullopt;
  return cat.type_at(*hit, true);
}

TypeAssignment restrict_type(const SymmetryGroup& s, const TypeAssignment& phi, const SymmetryGroup& sub) {
  TypeAssignment out;
  for (int y = 0; y < sub.order(); ++y) {
    const int x = s.find(sub.matrix(y));
    if (x < 0) throw Error(ErrorCode::BadParam, "element " + sub[y].label + " is not in the larger group");
    out.images.push_back(phi(x));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> describe_type(const Graph& g, const SymmetryGroup& s,
                                                               const TypeAssignment& phi, bool include_fixed) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int x = 0; x < s.order(); ++x) out.emplace_back(s[x].label, phi(x).to_cycles(g.labels(), include_fixed));
  return out;
}

}  // namespace symrig
