#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "symrig/rigidity.hpp"
#include "symrig/symmetry_group.hpp"

namespace symrig {

struct SvgOptions {
  int size = 480;                        // width and height in pixels
  double joint_radius = 6.0;
  double coincidence_tol = kDefaultCoincidenceTol;
  std::optional<SymmetryGroup> group;    // mirrors of this group are drawn dashed
};

// Fixed orthographic view for 3D frameworks: a turn of -30 degrees about z
// followed by -60 degrees about x. The projection keeps the first two rows.
Eigen::Matrix3d view_matrix();

// One <line class="bar"> per bar and one <circle class="joint"> per joint.
// Joints at a common position are drawn as concentric circles with a
// <text class="badge"> giving their multiplicity. Throws UnsupportedDim
// unless d is 2 or 3.
std::string render_svg(const Framework& f, const SvgOptions& opts = {});

}  // namespace symrig
