#include "symrig/linalg.hpp"

#include <algorithm>

#include <Eigen/SVD>

namespace symrig {

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return {};
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
}

int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rel_tol * s(0);
  return static_cast<int>((s.array() > cutoff).count());
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& m, double rel_tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = rel_tol * std::max(s.size() > 0 ? s(0) : 0.0, 1.0);
  const Eigen::Index rank = (s.array() > cutoff).count();
  return svd.matrixV().rightCols(cols - rank);
}

double scale_to_unit_box(Coordinates& p) {
  const double extent = p.size() == 0 ? 0.0 : p.cwiseAbs().maxCoeff();
  if (extent == 0.0) return 1.0;
  p /= extent;
  return 1.0 / extent;
}

}  // namespace symrig
