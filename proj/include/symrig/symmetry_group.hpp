#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace symrig {

inline constexpr double kMatrixTol = 1e-9;  // max-entry distance for element identity
inline constexpr int kMaxGroupOrder = 200;

struct OrthogonalOp {
  Eigen::MatrixXd matrix;
  std::string label;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

// Subspace of R^d spanned by the orthonormal columns of `basis`
// (zero columns is the trivial subspace {0}).
struct LinearSubspace {
  int ambient_dim = 0;
  Eigen::MatrixXd basis;

  int dim() const { return static_cast<int>(basis.cols()); }
};

// Finite subgroup of O(d). Element 0 is the identity. The product table is
// built once at construction: product(a, b) is the index of M_a * M_b, or -1
// if that product is not an element.
class SymmetryGroup {
 public:
  SymmetryGroup() = default;
  SymmetryGroup(int dim, std::vector<OrthogonalOp> elements, std::string name = {});

  int dim() const { return dim_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<OrthogonalOp>& elements() const { return elements_; }
  const OrthogonalOp& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const Eigen::MatrixXd& matrix(int i) const { return (*this)[i].matrix; }

  int find(const Eigen::MatrixXd& m, double tol = kMatrixTol) const;
  int find_label(std::string_view label) const;
  int product(int a, int b) const { return table_[static_cast<std::size_t>(a * order() + b)]; }
  int inverse(int a) const;

 private:
  int dim_ = 0;
  std::vector<OrthogonalOp> elements_;
  std::string name_;
  std::vector<int> table_;
};

// Orientation parameters for the catalog constructors. Angles in radians.
struct GroupParams {
  std::optional<int> m;                      // for placeholder names "Cm", "Dmd", "S2m", ...
  std::optional<double> mirror_angle;        // 2D: angle of the mirror line from the x-axis
  std::optional<Eigen::Vector3d> axis;       // 3D: principal axis (default z)
  std::optional<double> azimuth;             // 3D: turn of secondary C2 axes / vertical mirrors about the axis
  std::optional<double> dihedral_mirror_angle;  // 3D D_md: mirror-to-C2 angle (default pi/(2m))
  std::optional<Eigen::Vector3d> normal;     // 3D C_s: mirror normal (default y, i.e. the xz-plane)

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

// Catalog groups. 2D: C1, Cs, C<m>, C<m>v. 3D: C1, Cs, Ci, C<m>, C<m>v, C<m>h,
// D<m>, D<m>h, D<m>d, S<2m>, T, Td, Th, O, Oh, I, Ih. The letter "m" may stand
// in for the number when params.m is given.
SymmetryGroup schoenflies_group(std::string_view name, int dim, const GroupParams& params = {});

// Closure of the generators under matrix product, in breadth-first order
// starting from the identity. Elements get unique descriptive labels.
SymmetryGroup close_group(const std::vector<Eigen::MatrixXd>& generators, int bound = kMaxGroupOrder,
                          std::string name = {});

LinearSubspace fixed_subspace(const Eigen::MatrixXd& m);
inline LinearSubspace fixed_subspace(const OrthogonalOp& x) { return fixed_subspace(x.matrix); }

int element_order(const Eigen::MatrixXd& m, int bound = kMaxGroupOrder);
inline int element_order(const OrthogonalOp& x) { return element_order(x.matrix); }

// Checks orthogonality, determinant, identity at index 0, closure, inverses
// and pairwise distinctness. Returns a description of the first violation.
std::optional<std::string> validate_group(const SymmetryGroup& group);

// Descriptive Schoenflies-style name of a single operation, with its axis,
// normal or mirror-line angle in brackets when `with_direction` is set.
std::string describe_operation(const Eigen::MatrixXd& m, bool with_direction);

Eigen::Matrix2d rotation2(double angle);
Eigen::Matrix2d reflection2(double line_angle);
Eigen::Matrix3d rotation3(const Eigen::Vector3d& axis, double angle);
Eigen::Matrix3d reflection3(const Eigen::Vector3d& normal);

}  // namespace symrig
