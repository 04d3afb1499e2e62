#include "symrig/rigidity.hpp"

#include "symrig/error.hpp"

namespace symrig {

void validate_framework(const Framework& f, double tol) {
  if (f.coords.cols() != f.graph.vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinates do not cover every vertex");
  }
  const auto bad = coincident_bars(f.graph, f.coords, tol);
  if (!bad.empty()) {
    throw Error(ErrorCode::InvalidFramework, "bar {" + f.graph.label(bad.front().first) + "," +
                                                 f.graph.label(bad.front().second) +
                                                 "} has coincident endpoints");
  }
}

Eigen::MatrixXd rigidity_matrix(const Graph& g, const Coordinates& p) {
  const Eigen::Index d = p.rows();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(g.edge_count(), d * g.vertex_count());
  Eigen::Index row = 0;
  for (auto [i, j] : g.edges()) {
    const Eigen::VectorXd diff = p.col(i) - p.col(j);
    r.block(row, d * i, 1, d) = diff.transpose();
    r.block(row, d * j, 1, d) = -diff.transpose();
    ++row;
  }
  return r;
}

int affine_span_dim(const Coordinates& p, double rel_tol) {
  if (p.cols() <= 1) return 0;
  const Eigen::MatrixXd diffs = (-p.rightCols(p.cols() - 1)).colwise() + p.col(0);
  return numeric_rank(diffs.transpose(), rel_tol);
}

Eigen::MatrixXd trivial_motion_basis(const Framework& f) {
  const int d = f.dim();
  const int n = f.graph.vertex_count();
  const int rotations = d * (d - 1) / 2;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d * n, d + rotations);
  for (int k = 0; k < d; ++k)
    for (int v = 0; v < n; ++v) t(d * v + k, k) = 1.0;
  int col = d;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b, ++col) {
      // A = E_ab - E_ba, so (A p)_a = p_b and (A p)_b = -p_a.
      for (int v = 0; v < n; ++v) {
        t(d * v + a, col) = f.coords(b, v);
        t(d * v + b, col) = -f.coords(a, v);
      }
    }
  }
  return t;
}

RigidityReport rigidity_verdict(const Framework& f, const RigidityOptions& opts) {
  validate_framework(f, opts.framework_tol);
  Framework scaled = f;
  if (opts.normalize) scale_to_unit_box(scaled.coords);

  const int d = f.dim();
  const int n = f.graph.vertex_count();
  RigidityReport rep;
  const Eigen::MatrixXd r = rigidity_matrix(scaled.graph, scaled.coords);
  rep.rank = numeric_rank(r, opts.rank_tol);
  rep.row_count = static_cast<int>(r.rows());
  rep.col_count = static_cast<int>(r.cols());
  rep.expected_rank = d * n - d * (d + 1) / 2;
  rep.affine_span_dim = affine_span_dim(scaled.coords, opts.rank_tol);
  rep.trivial_dim = numeric_rank(trivial_motion_basis(scaled), opts.rank_tol);

  const bool affinely_independent = rep.affine_span_dim == n - 1;
  rep.infinitesimally_rigid =
      rep.rank == rep.expected_rank || (f.graph.is_complete() && affinely_independent);
  rep.independent = rep.rank == rep.row_count;
  rep.isostatic = rep.infinitesimally_rigid && rep.independent;
  return rep;
}

}  // namespace symrig
