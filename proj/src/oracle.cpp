#include "symrig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/LU>
#include <boost/multiprecision/cpp_int.hpp>

#include "symrig/error.hpp"
#include "symrig/linalg.hpp"
#include "symrig/rigidity.hpp"
#include "symrig/sym_generic.hpp"

namespace symrig::oracle {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Rational {
  long long num = 0;
  long long den = 1;
};

// Best approximation by continued fractions, stopping once the denominator
// limit would be exceeded.
Rational rationalize(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::NotRationalizable, "non-finite entry");
  const double sign = value < 0 ? -1.0 : 1.0;
  double x = std::abs(value);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(rest);
    if (a > 1e12) break;
    const auto ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0;
    const long long q2 = ai * q1 + q0;
    if (q2 > kMaxDenominator) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) <= kRationalTol * 1e-3) break;
    const double frac = rest - a;
    if (frac <= 0) break;
    rest = 1.0 / frac;
  }
  if (q1 == 0 || std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) > kRationalTol) {
    throw Error(ErrorCode::NotRationalizable, "entry " + std::to_string(value) + " has no small rational form");
  }
  return {static_cast<long long>(sign) * p1, q1};
}

int integer_rank(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

double minor_det(const Eigen::MatrixXd& r, const std::vector<int>& rows, const std::vector<int>& cols) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = r(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
  return sub.fullPivLu().determinant();
}

}  // namespace

std::vector<TypeAssignment> brute_force_type_search(const Graph& g, const Coordinates& p, const SymmetryGroup& s,
                                                    double tol) {
  const int n = g.vertex_count();
  if (n > kMaxBruteForceVertices || s.order() > kMaxBruteForceGroupOrder) {
    throw Error(ErrorCode::CapExceeded, "brute-force type search is limited to 9 vertices and 6 elements");
  }
  if (p.rows() != s.dim() || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "coordinate shape");

  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<std::vector<Permutation>> valid(static_cast<std::size_t>(s.order()));
  do {
    bool automorphism = true;
    for (const auto& [u, v] : g.edges()) {
      if (!g.adjacent(images[static_cast<std::size_t>(u)], images[static_cast<std::size_t>(v)])) {
        automorphism = false;
        break;
      }
    }
    if (!automorphism) continue;
    for (int x = 0; x < s.order(); ++x) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        ok = (s.matrix(x) * p.col(v) - p.col(images[static_cast<std::size_t>(v)])).norm() <= tol;
      }
      if (ok) valid[static_cast<std::size_t>(x)].emplace_back(images);
    }
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<TypeAssignment> out;
  for (const auto& set : valid)
    if (set.empty()) return out;
  std::vector<std::size_t> digit(valid.size(), 0);
  while (true) {
    TypeAssignment phi;
    for (std::size_t x = 0; x < valid.size(); ++x) phi.images.push_back(valid[x][digit[x]]);
    out.push_back(std::move(phi));
    std::size_t pos = valid.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < valid[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (valid.empty()) return out;
  }
}

bool exhaustive_generic_check(const Coordinates& p, const SymmetryGroup& s, const TypeAssignment& phi, int evals,
                              double tol, std::uint64_t seed) {
  const int n = static_cast<int>(p.cols());
  if (n > kMaxMinorVertices || p.rows() != 2 || s.dim() != 2) {
    throw Error(ErrorCode::CapExceeded, "minor enumeration is limited to n <= 4 in the plane");
  }
  const Graph kn = Graph::complete(n);
  const ConfigSpaceBasis b = config_space_basis(kn, s, phi);
  if (configuration_residual(flat(p), s, phi) > kDefaultRankTol) {
    throw Error(ErrorCode::BadParam, "configuration does not lie in the class");
  }

  Coordinates scaled = p;
  scale_to_unit_box(scaled);
  const Eigen::MatrixXd r = rigidity_matrix(kn, scaled);

  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Eigen::MatrixXd> samples;
  for (int e = 0; e < evals; ++e) {
    Eigen::VectorXd t(b.k());
    for (Eigen::Index j = 0; j < t.size(); ++j) t[j] = unit(engine);
    Coordinates q = unflatten(b.basis * t, 2);
    scale_to_unit_box(q);
    samples.push_back(rigidity_matrix(kn, q));
  }

  const int rows = static_cast<int>(r.rows());
  const int cols = static_cast<int>(r.cols());
  for (int size = 1; size <= std::min(rows, cols); ++size) {
    std::vector<int> ri(static_cast<std::size_t>(size));
    std::iota(ri.begin(), ri.end(), 0);
    do {
      std::vector<int> ci(static_cast<std::size_t>(size));
      std::iota(ci.begin(), ci.end(), 0);
      do {
        if (std::abs(minor_det(r, ri, ci)) > tol) continue;
        for (const auto& rs : samples) {
          if (std::abs(minor_det(rs, ri, ci)) > tol) return false;
        }
      } while (next_combination(ci, cols));
    } while (next_combination(ri, rows));
  }
  return true;
}

int kernel_oracle(const Eigen::MatrixXd& m) {
  std::vector<std::vector<BigInt>> a;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<Rational> row;
    BigInt lcm = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(rationalize(m(i, j)));
      lcm = boost::multiprecision::lcm(lcm, BigInt(row.back().den));
    }
    std::vector<BigInt> ints;
    for (const auto& q : row) ints.push_back(BigInt(q.num) * (lcm / q.den));
    a.push_back(std::move(ints));
  }
  return static_cast<int>(m.cols()) - integer_rank(std::move(a));
}

}  // namespace symrig::oracle
