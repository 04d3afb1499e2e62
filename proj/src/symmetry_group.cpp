#include "symrig/symmetry_group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Geometry>

#include "symrig/error.hpp"
#include "symrig/linalg.hpp"

namespace symrig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSnapTol = 1e-12;

double max_entry_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Entries near 0, +-1/2, +-1 are pinned to those values so repeated products
// do not drift.
Eigen::MatrixXd snap(Eigen::MatrixXd m) {
  static constexpr std::array<double, 5> kTargets{0.0, 0.5, -0.5, 1.0, -1.0};
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    for (double t : kTargets) {
      if (std::abs(m.data()[i] - t) <= kSnapTol) {
        m.data()[i] = t;
        break;
      }
    }
  }
  return m;
}

bool is_orthogonal(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Eigen::MatrixXd gram = m.transpose() * m;
  return max_entry_distance(gram, Eigen::MatrixXd::Identity(m.rows(), m.cols())) <= tol;
}

// Reduces a turn fraction to k/m with m <= 1000. Returns {0, 0} if none fits.
std::pair<int, int> turn_fraction(double angle) {
  double r = angle / (2 * kPi);
  r -= std::floor(r);
  for (int m = 1; m <= 1000; ++m) {
    const double km = r * m;
    const long k = std::lround(km);
    if (std::abs(km - static_cast<double>(k)) < 1e-7) return {static_cast<int>(k % m), m};
  }
  return {0, 0};
}

std::string format_number(double x) {
  if (std::abs(x) < 5e-5) x = 0.0;
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << x;
  std::string s = os.str();
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string format_direction(const Eigen::Vector3d& v) {
  return "[" + format_number(v.x()) + "," + format_number(v.y()) + "," + format_number(v.z()) + "]";
}

// First non-negligible component positive.
Eigen::Vector3d canonical_sign(Eigen::Vector3d v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v(i)) > 1e-9) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

std::string rotation_name(const char* letter, double angle) {
  const auto [k, m] = turn_fraction(angle);
  if (m == 0) return std::string(letter) + "(" + format_number(angle * 180 / kPi) + "deg)";
  return std::string(letter) + std::to_string(m) + (k == 1 ? "" : "^" + std::to_string(k));
}

struct AxisAngle {
  Eigen::Vector3d axis;
  double angle;  // in [0, 2 pi)
};

AxisAngle proper_axis_angle(const Eigen::Matrix3d& r) {
  const Eigen::MatrixXd k = kernel_basis(Eigen::MatrixXd(r - Eigen::Matrix3d::Identity()), 1e-7);
  Eigen::Vector3d axis = k.cols() > 0 ? Eigen::Vector3d(k.col(0)) : Eigen::Vector3d::UnitZ();
  axis = canonical_sign(axis.normalized());
  const Eigen::Vector3d w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  double angle = std::atan2(axis.dot(w) / 2.0, (r.trace() - 1.0) / 2.0);
  if (angle < 0) angle += 2 * kPi;
  return {axis, angle};
}

}  // namespace

Eigen::Matrix2d rotation2(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

Eigen::Matrix2d reflection2(double line_angle) {
  Eigen::Matrix2d r;
  r << std::cos(2 * line_angle), std::sin(2 * line_angle), std::sin(2 * line_angle), -std::cos(2 * line_angle);
  return r;
}

Eigen::Matrix3d rotation3(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

Eigen::Matrix3d reflection3(const Eigen::Vector3d& normal) {
  const Eigen::Vector3d n = normal.normalized();
  return Eigen::Matrix3d::Identity() - 2.0 * n * n.transpose();
}

std::string describe_operation(const Eigen::MatrixXd& m, bool with_direction) {
  const int d = static_cast<int>(m.rows());
  if (max_entry_distance(m, Eigen::MatrixXd::Identity(d, d)) <= kMatrixTol) return "Id";
  const double det = m.determinant();
  if (d == 2) {
    if (det > 0) return rotation_name("C", std::atan2(m(1, 0), m(0, 0)));
    double line = std::atan2(m(1, 0), m(0, 0)) / 2.0;
    if (line < -1e-12) line += kPi;
    if (!with_direction) return "s";
    if (std::abs(line) < 1e-9 || std::abs(line - kPi) < 1e-9) return "s_h";
    if (std::abs(line - kPi / 2) < 1e-9) return "s_v";
    return "s[" + format_number(line * 180 / kPi) + "]";
  }
  if (d != 3) return "x";
  const Eigen::Matrix3d m3 = m;
  if (det > 0) {
    const auto [axis, angle] = proper_axis_angle(m3);
    const std::string base = rotation_name("C", angle);
    return with_direction ? base + format_direction(axis) : base;
  }
  if (max_entry_distance(m, -Eigen::MatrixXd::Identity(3, 3)) <= kMatrixTol) return "i";
  auto [axis, angle] = proper_axis_angle(-m3);
  angle = std::fmod(angle + kPi, 2 * kPi);
  if (angle < 1e-9 || 2 * kPi - angle < 1e-9) {
    return with_direction ? "s" + format_direction(axis) : "s";
  }
  const std::string base = rotation_name("S", angle);
  return with_direction ? base + format_direction(axis) : base;
}

SymmetryGroup::SymmetryGroup(int dim, std::vector<OrthogonalOp> elements, std::string name)
    : dim_(dim), elements_(std::move(elements)), name_(std::move(name)) {
  for (const auto& e : elements_) {
    if (e.dim() != dim_ || e.matrix.cols() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "group element of wrong dimension");
    }
  }
  const int n = order();
  table_.assign(static_cast<std::size_t>(n * n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table_[static_cast<std::size_t>(a * n + b)] = find(matrix(a) * matrix(b));
}

int SymmetryGroup::find(const Eigen::MatrixXd& m, double tol) const {
  if (m.rows() != dim_ || m.cols() != dim_) return -1;
  for (int i = 0; i < order(); ++i) {
    if (max_entry_distance(matrix(i), m) <= tol) return i;
  }
  return -1;
}

int SymmetryGroup::find_label(std::string_view label) const {
  for (int i = 0; i < order(); ++i) {
    if (elements_[static_cast<std::size_t>(i)].label == label) return i;
  }
  return -1;
}

int SymmetryGroup::inverse(int a) const {
  for (int b = 0; b < order(); ++b) {
    if (product(a, b) == 0) return b;
  }
  return -1;
}

SymmetryGroup close_group(const std::vector<Eigen::MatrixXd>& generators, int bound, std::string name) {
  if (generators.empty()) throw Error(ErrorCode::BadParam, "no generators given");
  const Eigen::Index d = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) {
      throw Error(ErrorCode::DimensionMismatch, "generators must share one square dimension");
    }
    if (!is_orthogonal(g, 1e-12)) {
      throw Error(ErrorCode::NonOrthogonalGenerator, "generator is not orthogonal");
    }
  }

  std::vector<Eigen::MatrixXd> elems{Eigen::MatrixXd::Identity(d, d)};
  auto known = [&](const Eigen::MatrixXd& m) {
    return std::any_of(elems.begin(), elems.end(),
                       [&](const Eigen::MatrixXd& e) { return max_entry_distance(e, m) <= kMatrixTol; });
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Eigen::MatrixXd prod = snap(g * elems[i]);
      if (known(prod)) continue;
      elems.push_back(std::move(prod));
      if (static_cast<int>(elems.size()) > bound) {
        throw Error(ErrorCode::NotClosedWithinBound,
                    "group closure exceeded " + std::to_string(bound) + " elements");
      }
    }
  }

  // Labels: plain names where unambiguous, direction-qualified otherwise.
  std::vector<std::string> plain;
  std::map<std::string, int> counts;
  for (const auto& e : elems) {
    plain.push_back(describe_operation(e, false));
    ++counts[plain.back()];
  }
  std::vector<OrthogonalOp> ops;
  std::map<std::string, int> used;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::string label = counts[plain[i]] > 1 ? describe_operation(elems[i], true) : plain[i];
    if (const int seen = used[label]++; seen > 0) label += "#" + std::to_string(seen + 1);
    ops.push_back({elems[i], std::move(label)});
  }
  return SymmetryGroup(static_cast<int>(d), std::move(ops), std::move(name));
}

namespace {

struct ParsedName {
  std::string family;  // name with the numeric part replaced by "m"
  int m = 0;
};

ParsedName parse_name(std::string_view name, const GroupParams& params) {
  static const std::map<std::string, std::string, std::less<>> kPlaceholders{
      {"Cm", "C#"}, {"Cmv", "C#v"}, {"Cmh", "C#h"}, {"Dm", "D#"}, {"Dmh", "D#h"}, {"Dmd", "D#d"}, {"S2m", "S#"}};
  if (const auto it = kPlaceholders.find(name); it != kPlaceholders.end()) {
    if (!params.m) throw Error(ErrorCode::BadParam, "group '" + std::string(name) + "' needs params.m");
    if (*params.m < 2) throw Error(ErrorCode::BadParam, "m must be at least 2");
    return {it->second, it->first == "S2m" ? 2 * *params.m : *params.m};
  }
  ParsedName out;
  std::size_t i = 0;
  while (i < name.size() && !std::isdigit(static_cast<unsigned char>(name[i]))) out.family += name[i++];
  if (i == name.size()) return out;
  std::size_t j = i;
  while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
  if (j - i > 4) throw Error(ErrorCode::UnknownName, "unknown group '" + std::string(name) + "'");
  out.m = std::stoi(std::string(name.substr(i, j - i)));
  out.family += "#";
  out.family += name.substr(j);
  return out;
}

Eigen::Matrix3d frame(const GroupParams& params) {
  const double azimuth = params.azimuth.value_or(0.0);
  if (!params.axis && azimuth == 0.0) return Eigen::Matrix3d::Identity();
  const Eigen::Vector3d a = params.axis.value_or(Eigen::Vector3d::UnitZ()).normalized();
  Eigen::Vector3d ref = Eigen::Vector3d::UnitX();
  if (std::abs(a.dot(ref)) > 0.9) ref = Eigen::Vector3d::UnitY();
  Eigen::Vector3d e1 = (ref - ref.dot(a) * a).normalized();
  e1 = rotation3(a, azimuth) * e1;
  Eigen::Matrix3d q;
  q.col(0) = e1;
  q.col(1) = a.cross(e1);
  q.col(2) = a;
  return q;
}

}  // namespace

SymmetryGroup schoenflies_group(std::string_view name, int dim, const GroupParams& params) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::UnsupportedDim, "symmetry groups exist here only in 2D and 3D");
  if (params.axis && params.axis->norm() < 1e-12) throw Error(ErrorCode::BadParam, "axis must be nonzero");
  if (params.normal && params.normal->norm() < 1e-12) throw Error(ErrorCode::BadParam, "normal must be nonzero");

  const ParsedName parsed = parse_name(name, params);
  const std::string& fam = parsed.family;
  const int m = parsed.m;
  const std::string label(name);
  auto unknown = [&]() {
    return Error(ErrorCode::UnknownName, "unknown " + std::to_string(dim) + "D group '" + label + "'");
  };
  auto need_m = [&](int lo) {
    if (m < lo) throw unknown();
  };

  if (dim == 2) {
    const double line = params.mirror_angle.value_or(0.0);
    if (fam == "C#" && m == 1) return close_group({Eigen::MatrixXd::Identity(2, 2)}, kMaxGroupOrder, label);
    if (fam == "Cs") return close_group({reflection2(line)}, kMaxGroupOrder, label);
    if (fam == "C#") {
      need_m(2);
      return close_group({rotation2(2 * kPi / m)}, kMaxGroupOrder, label);
    }
    if (fam == "C#v") {
      need_m(2);
      return close_group({rotation2(2 * kPi / m), reflection2(line)}, kMaxGroupOrder, label);
    }
    throw unknown();
  }

  const Eigen::Matrix3d q = frame(params);
  auto in_frame = [&](const Eigen::Matrix3d& local) -> Eigen::MatrixXd { return q * local * q.transpose(); };
  const Eigen::Matrix3d sigma_h = Eigen::Vector3d(1, 1, -1).asDiagonal();
  const Eigen::Matrix3d sigma_v = Eigen::Vector3d(1, -1, 1).asDiagonal();  // xz-plane
  const Eigen::Matrix3d c2x = Eigen::Vector3d(1, -1, -1).asDiagonal();
  const Eigen::Matrix3d inversion = -Eigen::Matrix3d::Identity();
  auto cz = [&](int k) { return rotation3(Eigen::Vector3d::UnitZ(), 2 * kPi / k); };
  std::vector<Eigen::MatrixXd> gens;

  if (fam == "C#" && m == 1) {
    gens = {Eigen::MatrixXd::Identity(3, 3)};
  } else if (fam == "Cs") {
    gens = {reflection3(params.normal.value_or(Eigen::Vector3d::UnitY()))};
  } else if (fam == "Ci") {
    gens = {inversion};
  } else if (fam == "C#") {
    need_m(2);
    gens = {in_frame(cz(m))};
  } else if (fam == "C#v") {
    need_m(2);
    gens = {in_frame(cz(m)), in_frame(sigma_v)};
  } else if (fam == "C#h") {
    need_m(2);
    gens = {in_frame(cz(m)), in_frame(sigma_h)};
  } else if (fam == "D#") {
    need_m(2);
    gens = {in_frame(cz(m)), in_frame(c2x)};
  } else if (fam == "D#h") {
    need_m(2);
    gens = {in_frame(cz(m)), in_frame(c2x), in_frame(sigma_h)};
  } else if (fam == "D#d") {
    need_m(2);
    const double beta = params.dihedral_mirror_angle.value_or(kPi / (2 * m));
    const Eigen::Vector3d normal(-std::sin(beta), std::cos(beta), 0.0);
    gens = {in_frame(cz(m)), in_frame(c2x), in_frame(reflection3(normal))};
  } else if (fam == "S#") {
    if (m < 4 || m % 2 != 0) throw unknown();
    gens = {in_frame(cz(m) * sigma_h)};
  } else {
    Eigen::Matrix3d c3;
    c3 << 0, 0, 1, 1, 0, 0, 0, 1, 0;  // (x, y, z) -> (z, x, y), about (1, 1, 1)
    const Eigen::Matrix3d c2z = Eigen::Vector3d(-1, -1, 1).asDiagonal();
    Eigen::Matrix3d c4z;
    c4z << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    Eigen::Matrix3d diagonal_mirror;  // plane x = y
    diagonal_mirror << 0, 1, 0, 1, 0, 0, 0, 0, 1;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const Eigen::Matrix3d c5 = rotation3(Eigen::Vector3d(0.0, 1.0, phi), 2 * kPi / 5);

    std::vector<Eigen::Matrix3d> local;
    if (fam == "T") local = {c3, c2z};
    else if (fam == "Td") local = {c3, c2z, diagonal_mirror};
    else if (fam == "Th") local = {c3, c2z, inversion};
    else if (fam == "O") local = {c4z, c3};
    else if (fam == "Oh") local = {c4z, c3, inversion};
    else if (fam == "I") local = {c3, c2z, c5};
    else if (fam == "Ih") local = {c3, c2z, c5, inversion};
    else throw unknown();
    for (const auto& g : local) gens.push_back(in_frame(g));
  }
  for (auto& g : gens) g = snap(g);
  return close_group(gens, kMaxGroupOrder, label);
}

LinearSubspace fixed_subspace(const Eigen::MatrixXd& m) {
  const Eigen::Index d = m.rows();
  return {static_cast<int>(d), kernel_basis(m - Eigen::MatrixXd::Identity(d, d), kDefaultKernelTol)};
}

int element_order(const Eigen::MatrixXd& m, int bound) {
  const Eigen::Index d = m.rows();
  Eigen::MatrixXd power = m;
  for (int k = 1; k <= bound; ++k) {
    if (max_entry_distance(power, Eigen::MatrixXd::Identity(d, d)) <= kMatrixTol) return k;
    power = snap(power * m);
  }
  throw Error(ErrorCode::OrderBoundExceeded, "element order exceeds " + std::to_string(bound));
}

std::optional<std::string> validate_group(const SymmetryGroup& group) {
  const int n = group.order();
  const int d = group.dim();
  if (n == 0) return "group has no elements";
  if (max_entry_distance(group.matrix(0), Eigen::MatrixXd::Identity(d, d)) > 1e-12) {
    return "element 0 is not the identity";
  }
  for (int i = 0; i < n; ++i) {
    const auto& m = group.matrix(i);
    if (!is_orthogonal(m, 1e-12)) return "element " + group[i].label + " is not orthogonal";
    if (std::abs(std::abs(m.determinant()) - 1.0) > 1e-12) return "element " + group[i].label + " has |det| != 1";
    for (int j = i + 1; j < n; ++j) {
      if (max_entry_distance(m, group.matrix(j)) <= kMatrixTol) {
        return "elements " + group[i].label + " and " + group[j].label + " coincide";
      }
      if (group[i].label == group[j].label) return "duplicate label " + group[i].label;
    }
    for (int j = 0; j < n; ++j) {
      if (group.product(i, j) < 0) return "product " + group[i].label + "*" + group[j].label + " not in group";
    }
    if (group.inverse(i) < 0) return "element " + group[i].label + " has no inverse";
  }
  return std::nullopt;
}

}  // namespace symrig
