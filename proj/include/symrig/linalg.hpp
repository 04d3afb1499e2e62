#pragma once

#include <Eigen/Core>

#include "symrig/graph.hpp"

namespace symrig {

inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr double kDefaultKernelTol = 1e-9;

// Number of singular values strictly above rel_tol * sigma_max; 0 for the
// zero matrix.
int numeric_rank(const Eigen::MatrixXd& m, double rel_tol = kDefaultRankTol);

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

// Orthonormal basis (as columns) of ker(m). Singular values at or below
// rel_tol * max(sigma_max, 1) count as zero.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m, double rel_tol = kDefaultKernelTol);

// Scales coordinates in place so the largest absolute entry is 1. Returns the
// factor applied (1 for the zero configuration).
double scale_to_unit_box(Coordinates& p);

inline Eigen::Map<const Eigen::VectorXd> flat(const Coordinates& p) {
  return {p.data(), p.size()};
}

inline Coordinates unflatten(const Eigen::VectorXd& v, int dim) {
  return Eigen::Map<const Eigen::MatrixXd>(v.data(), dim, v.size() / dim);
}

}  // namespace symrig
