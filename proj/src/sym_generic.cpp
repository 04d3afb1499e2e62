#include "symrig/sym_generic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "symrig/error.hpp"

namespace symrig {

namespace {

void check_group_type(const SymmetryGroup& s, const TypeAssignment& phi, int n) {
  if (phi.size() != s.order()) {
    throw Error(ErrorCode::DimensionMismatch, "type has " + std::to_string(phi.size()) +
                                                  " images for a group of order " + std::to_string(s.order()));
  }
  for (const auto& img : phi.images) {
    if (img.size() != n) throw Error(ErrorCode::LengthMismatch, "type image has the wrong length");
  }
}

std::mt19937_64 make_engine(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Eigen::MatrixXd block_operator(const Eigen::MatrixXd& mx, int n) {
  const Eigen::Index d = mx.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d * n, d * n);
  for (int v = 0; v < n; ++v) out.block(d * v, d * v, d, d) = mx;
  return out;
}

Eigen::MatrixXd permutation_operator(const Permutation& sigma, int d) {
  const int n = sigma.size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d * n, d * n);
  for (int v = 0; v < n; ++v) out.block(d * v, d * sigma(v), d, d).setIdentity();
  return out;
}

Eigen::MatrixXd symmetry_constraint_matrix(const SymmetryGroup& s, const TypeAssignment& phi, int n) {
  check_group_type(s, phi, n);
  const int d = s.dim();
  std::vector<int> rows;
  for (int x = 0; x < s.order(); ++x) {
    if (x == 0 && phi(0).is_identity()) continue;
    rows.push_back(x);
  }
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()) * d * n, d * n);
  Eigen::Index r = 0;
  for (int x : rows) {
    out.middleRows(r, d * n) = block_operator(s.matrix(x), n) - permutation_operator(phi(x), d);
    r += d * n;
  }
  return out;
}

ConfigSpaceBasis config_space_basis(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi) {
  const int n = g.vertex_count();
  ConfigSpaceBasis b;
  b.dim = s.dim();
  b.vertex_count = n;
  b.basis = kernel_basis(symmetry_constraint_matrix(s, phi, n));
  return b;
}

double configuration_residual(const Eigen::VectorXd& p, const SymmetryGroup& s, const TypeAssignment& phi) {
  const int d = s.dim();
  const int n = static_cast<int>(p.size()) / d;
  check_group_type(s, phi, n);
  double worst = 0.0;
  for (int x = 0; x < s.order(); ++x) {
    for (int v = 0; v < n; ++v) {
      const Eigen::VectorXd moved = s.matrix(x) * p.segment(d * v, d);
      worst = std::max(worst, (moved - p.segment(d * phi(x)(v), d)).norm());
    }
  }
  return worst;
}

double basis_residual(const ConfigSpaceBasis& b, const SymmetryGroup& s, const TypeAssignment& phi) {
  double worst = 0.0;
  for (int j = 0; j < b.k(); ++j) worst = std::max(worst, configuration_residual(b.basis.col(j), s, phi));
  return worst;
}

EmptinessReport class_is_empty(const Graph& g, const ConfigSpaceBasis& b, double tol) {
  EmptinessReport rep;
  const int d = b.dim;
  for (const auto& e : g.edges()) {
    const Eigen::MatrixXd diff = b.basis.middleRows(d * e.first, d) - b.basis.middleRows(d * e.second, d);
    const double size = diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
    if (size <= tol) rep.edges.push_back(e);
  }
  rep.empty = !rep.edges.empty();
  return rep;
}

Framework sample_config(const Graph& g, const ConfigSpaceBasis& b, std::uint64_t seed, int retries,
                        double framework_tol) {
  auto engine = make_engine(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    Eigen::VectorXd t(b.k());
    for (Eigen::Index j = 0; j < t.size(); ++j) t[j] = unit(engine);
    Coordinates p = unflatten(b.basis * t, b.dim);
    scale_to_unit_box(p);
    if (is_framework(g, p, framework_tol)) return {g, p};
  }
  throw Error(ErrorCode::SamplingExhausted,
              "no framework found in " + std::to_string(retries + 1) + " draws from the class");
}

OrbitStructure orbit_structure(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi) {
  const int n = g.vertex_count();
  check_group_type(s, phi, n);
  if (!is_homomorphism(s, phi)) {
    throw Error(ErrorCode::NotAHomomorphism, "orbit sampling needs a homomorphic type");
  }
  OrbitStructure os;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  const int d = s.dim();
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> orbit;
    std::vector<int> stabilizer;
    for (int x = 0; x < s.order(); ++x) {
      const int w = phi(x)(v);
      if (w == v) stabilizer.push_back(x);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        orbit.push_back(w);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    Eigen::MatrixXd stacked(static_cast<Eigen::Index>(stabilizer.size()) * d, d);
    for (std::size_t i = 0; i < stabilizer.size(); ++i) {
      stacked.middleRows(static_cast<Eigen::Index>(i) * d, d) =
          s.matrix(stabilizer[i]) - Eigen::MatrixXd::Identity(d, d);
    }
    os.orbits.push_back(std::move(orbit));
    os.representatives.push_back(v);
    os.fixed_spaces.push_back({d, kernel_basis(stacked)});
  }
  return os;
}

Framework orbit_sample(const Graph& g, const OrbitStructure& os, const SymmetryGroup& s,
                       const TypeAssignment& phi, std::uint64_t seed, int retries, double framework_tol) {
  const int n = g.vertex_count();
  const int d = s.dim();
  auto engine = make_engine(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    Coordinates p = Coordinates::Zero(d, n);
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < os.representatives.size(); ++i) {
      const auto& f = os.fixed_spaces[i];
      Eigen::VectorXd c = Eigen::VectorXd::Zero(f.dim());
      if (f.dim() > 0) {
        for (Eigen::Index j = 0; j < c.size(); ++j) c[j] = gauss(engine);
        const double radius = std::pow(unit(engine), 1.0 / f.dim());
        if (c.norm() > 0) c *= radius / c.norm();
      }
      const Eigen::VectorXd base = f.basis * c;
      const int v = os.representatives[i];
      for (int x = 0; x < s.order(); ++x) {
        const int w = phi(x)(v);
        const Eigen::VectorXd image = s.matrix(x) * base;
        if (placed[static_cast<std::size_t>(w)]) {
          if ((p.col(w) - image).norm() > kDefaultKernelTol) {
            throw Error(ErrorCode::InconsistentPropagation,
                        "joint " + g.label(w) + " receives two different positions");
          }
        } else {
          p.col(w) = image;
          placed[static_cast<std::size_t>(w)] = 1;
        }
      }
    }
    if (configuration_residual(flat(p), s, phi) > kDefaultRankTol) {
      throw Error(ErrorCode::InconsistentPropagation, "propagated configuration leaves the class");
    }
    if (is_framework(g, p, framework_tol)) return {g, p};
  }
  throw Error(ErrorCode::SamplingExhausted,
              "no framework found in " + std::to_string(retries + 1) + " orbit draws");
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<TrialOutcome> run_trials(const Graph& g, const ConfigSpaceBasis& b, int count, std::uint64_t seed,
                                     const RigidityOptions& rigidity, int retries, Execution exec) {
  std::vector<TrialOutcome> out(static_cast<std::size_t>(std::max(count, 0)));
  for_each_index(
      out.size(),
      [&](std::size_t i) {
        Framework f = sample_config(g, b, trial_seed(seed, i), retries, rigidity.framework_tol);
        out[i].report = rigidity_verdict(f, rigidity);
        out[i].coords = std::move(f.coords);
      },
      exec);
  return out;
}

SymGenericReport sym_generic_verdict(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi,
                                     const SymGenericOptions& opts) {
  check_type_shape(g, s, phi);
  if (opts.trials < 1) throw Error(ErrorCode::BadParam, "at least one trial is required");
  const ConfigSpaceBasis b = config_space_basis(g, s, phi);
  SymGenericReport rep;
  rep.k = b.k();
  const int d = s.dim();
  const int n = g.vertex_count();
  rep.expected_rank = d * n - d * (d + 1) / 2;
  const EmptinessReport empty = class_is_empty(g, b);
  rep.empty = empty.empty;
  rep.offending_edges = empty.edges;
  if (rep.empty) return rep;

  const auto trials = run_trials(g, b, opts.trials, opts.seed, opts.rigidity, opts.retries, opts.exec);
  rep.samples_drawn = static_cast<int>(trials.size());
  int best = -1;
  auto score = [](const RigidityReport& r) {
    return (r.isostatic ? 4 : 0) + (r.infinitesimally_rigid ? 2 : 0) + (r.independent ? 1 : 0);
  };
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const auto& r = trials[i].report;
    rep.ranks.push_back(r.rank);
    rep.max_rank = std::max(rep.max_rank, r.rank);
    rep.rigid = rep.rigid || r.infinitesimally_rigid;
    rep.independent = rep.independent || r.independent;
    rep.isostatic = rep.isostatic || r.isostatic;
    const auto key = std::make_pair(score(r), r.rank);
    if (best < 0 || key > std::make_pair(score(trials[static_cast<std::size_t>(best)].report),
                                         trials[static_cast<std::size_t>(best)].report.rank)) {
      best = static_cast<int>(i);
    }
  }
  rep.witness_trial = best;
  rep.witness = trials[static_cast<std::size_t>(best)].coords;
  rep.witness_report = trials[static_cast<std::size_t>(best)].report;
  return rep;
}

}  // namespace symrig
