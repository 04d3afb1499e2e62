#pragma once

#include <Eigen/Core>

#include "symrig/graph.hpp"
#include "symrig/linalg.hpp"

namespace symrig {

struct Framework {
  Graph graph;
  Coordinates coords;  // d x n

  int dim() const { return static_cast<int>(coords.rows()); }
};

// Throws InvalidFramework if some bar has coincident endpoints.
void validate_framework(const Framework& f, double tol = kDefaultCoincidenceTol);

struct RigidityOptions {
  double rank_tol = kDefaultRankTol;
  double framework_tol = kDefaultCoincidenceTol;
  bool normalize = true;  // scale to the unit box before any rank decision
};

struct RigidityReport {
  int rank = 0;
  int row_count = 0;
  int col_count = 0;
  int expected_rank = 0;  // d n - C(d+1, 2)
  int affine_span_dim = 0;
  int trivial_dim = 0;
  bool infinitesimally_rigid = false;
  bool independent = false;
  bool isostatic = false;
};

// |E| x dn; row {i,j} carries p_i - p_j in block i and p_j - p_i in block j.
// Defined for any coordinates: coincident bars give zero rows.
Eigen::MatrixXd rigidity_matrix(const Graph& g, const Coordinates& p);

int affine_span_dim(const Coordinates& p, double rel_tol = kDefaultRankTol);

// d translations followed by the C(d,2) infinitesimal rotations u_i = A p_i,
// one per column. Columns may be dependent for degenerate configurations.
Eigen::MatrixXd trivial_motion_basis(const Framework& f);

RigidityReport rigidity_verdict(const Framework& f, const RigidityOptions& opts = {});

}  // namespace symrig
