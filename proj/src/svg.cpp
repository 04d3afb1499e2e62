#include "symrig/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Geometry>

#include "symrig/error.hpp"

namespace symrig {

namespace {

struct Canvas {
  double scale = 1.0;
  double half = 0.0;

  Eigen::Vector2d map(const Eigen::Vector2d& q) const { return {half + scale * q.x(), half - scale * q.y()}; }
};

std::string fmt(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (std::abs(v) < 0.005 ? 0.0 : v);
  return s.str();
}

Eigen::MatrixXd project(const Eigen::MatrixXd& pts, int d) {
  if (d == 2) return pts;
  return (view_matrix() * pts).topRows(2);
}

bool is_reflection(const Eigen::MatrixXd& m) {
  return m.determinant() < 0 && fixed_subspace(m).dim() == m.rows() - 1;
}

}  // namespace

Eigen::Matrix3d view_matrix() {
  const double deg = std::numbers::pi / 180.0;
  const Eigen::Matrix3d rz = Eigen::AngleAxisd(-30.0 * deg, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  const Eigen::Matrix3d rx = Eigen::AngleAxisd(-60.0 * deg, Eigen::Vector3d::UnitX()).toRotationMatrix();
  return rx * rz;
}

std::string render_svg(const Framework& f, const SvgOptions& opts) {
  const int d = f.dim();
  if (d != 2 && d != 3) throw Error(ErrorCode::UnsupportedDim, "only 2D and 3D frameworks can be drawn");
  const int n = f.graph.vertex_count();
  const Eigen::MatrixXd q = project(f.coords, d);

  double extent = 1e-12;
  for (Eigen::Index v = 0; v < q.cols(); ++v) extent = std::max(extent, q.col(v).norm());
  Canvas canvas;
  canvas.half = opts.size / 2.0;
  canvas.scale = 0.8 * canvas.half / extent;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\"" << opts.size
      << "\" viewBox=\"0 0 " << opts.size << ' ' << opts.size << "\">\n";
  out << "<style>.bar{stroke:#222;stroke-width:2}.joint{fill:#fff;stroke:#222;stroke-width:1.5}"
         ".mirror{stroke:#888;stroke-width:1;stroke-dasharray:6 4;fill:none}"
         ".badge{font:11px sans-serif;fill:#c00}.label{font:11px sans-serif;fill:#225}</style>\n";

  if (opts.group) {
    const double reach = 1.1 * extent;
    for (const auto& op : opts.group->elements()) {
      if (!is_reflection(op.matrix)) continue;
      const Eigen::MatrixXd plane = fixed_subspace(op.matrix).basis;
      if (d == 2) {
        const Eigen::Vector2d a = canvas.map(reach * plane.col(0));
        const Eigen::Vector2d b = canvas.map(-reach * plane.col(0));
        out << "<line class=\"mirror\" x1=\"" << fmt(a.x()) << "\" y1=\"" << fmt(a.y()) << "\" x2=\"" << fmt(b.x())
            << "\" y2=\"" << fmt(b.y()) << "\"/>\n";
      } else {
        out << "<polygon class=\"mirror\" points=\"";
        const double corners[4][2] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
        for (int c = 0; c < 4; ++c) {
          const Eigen::Vector3d w = reach * (corners[c][0] * plane.col(0) + corners[c][1] * plane.col(1));
          const Eigen::Vector2d s = canvas.map((view_matrix() * w).head<2>());
          out << (c ? " " : "") << fmt(s.x()) << ',' << fmt(s.y());
        }
        out << "\"/>\n";
      }
    }
  }

  for (const auto& [i, j] : f.graph.edges()) {
    const Eigen::Vector2d a = canvas.map(q.col(i));
    const Eigen::Vector2d b = canvas.map(q.col(j));
    out << "<line class=\"bar\" x1=\"" << fmt(a.x()) << "\" y1=\"" << fmt(a.y()) << "\" x2=\"" << fmt(b.x())
        << "\" y2=\"" << fmt(b.y()) << "\"/>\n";
  }

  // Group joints sharing a position in R^d, in vertex order.
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] >= 0) continue;
    owner[static_cast<std::size_t>(v)] = v;
    for (int w = v + 1; w < n; ++w) {
      if (owner[static_cast<std::size_t>(w)] < 0 && (f.coords.col(v) - f.coords.col(w)).norm() <= opts.coincidence_tol) {
        owner[static_cast<std::size_t>(w)] = v;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] != v) continue;
    std::vector<int> members;
    for (int w = v; w < n; ++w)
      if (owner[static_cast<std::size_t>(w)] == v) members.push_back(w);
    const Eigen::Vector2d c = canvas.map(q.col(v));
    const int count = static_cast<int>(members.size());
    std::string names;
    for (int k = 0; k < count; ++k) {
      const double r = opts.joint_radius * (1.0 + 0.6 * (count - 1 - k));
      out << "<circle class=\"joint\" cx=\"" << fmt(c.x()) << "\" cy=\"" << fmt(c.y()) << "\" r=\"" << fmt(r)
          << "\"/>\n";
      names += (k ? "," : "") + f.graph.label(members[static_cast<std::size_t>(k)]);
    }
    const double offset = opts.joint_radius * (1.0 + 0.6 * (count - 1)) + 3.0;
    if (count > 1) {
      out << "<text class=\"badge\" x=\"" << fmt(c.x() + offset) << "\" y=\"" << fmt(c.y() + offset) << "\">x"
          << count << "</text>\n";
    }
    out << "<text class=\"label\" x=\"" << fmt(c.x() + offset) << "\" y=\"" << fmt(c.y() - offset) << "\">" << names
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace symrig
