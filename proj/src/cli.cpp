#include "symrig/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symrig/classification.hpp"
#include "symrig/error.hpp"
#include "symrig/oracle.hpp"
#include "symrig/problem.hpp"
#include "symrig/rigidity.hpp"
#include "symrig/svg.hpp"
#include "symrig/sym_generic.hpp"

namespace symrig {

namespace {

using json = nlohmann::ordered_json;

struct Flags {
  std::string file;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<double> tol_rank;
  std::optional<double> tol_geom;
  bool normalized = false;
  bool orbit = false;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Problem load(const Flags& flags) {
  ProblemFile f = parse_problem(read_file(flags.file));
  if (flags.seed) f.seed = *flags.seed;
  if (flags.trials) f.trials = *flags.trials;
  if (flags.tol_rank) f.tol_rank = *flags.tol_rank;
  if (flags.tol_geom) f.tol_geom = *flags.tol_geom;
  return instantiate(f);
}

const Coordinates& need_coords(const Problem& p, const std::string& why) {
  if (!p.coords) throw Error(ErrorCode::BadParam, why + " needs coordinates in the problem file");
  return *p.coords;
}

// Explicit types are used as given. "auto" prefers a homomorphic type of the
// given coordinates and falls back to the first valid type.
TypeAssignment resolve_type(const Problem& p) {
  if (p.type) return *p.type;
  if (p.file.type_mode == TypeMode::Enumerate) {
    throw Error(ErrorCode::BadParam, "this command needs a single type, not \"enumerate\"");
  }
  const Coordinates& c = need_coords(p, "type \"auto\"");
  if (auto hom = find_homomorphic_type(p.graph, c, p.group, p.file.tol_geom)) return *hom;
  if (auto base = find_base_type(p.graph, c, p.group, p.file.tol_geom)) return *base;
  throw Error(ErrorCode::EmptyClass, "the coordinates are not symmetric under the group");
}

RigidityOptions rigidity_options(const Problem& p) {
  RigidityOptions o;
  o.rank_tol = p.file.tol_rank;
  o.framework_tol = p.file.tol_geom;
  return o;
}

json coords_json(const Coordinates& c) {
  json out = json::array();
  for (Eigen::Index v = 0; v < c.cols(); ++v) {
    json pt = json::array();
    for (Eigen::Index k = 0; k < c.rows(); ++k) pt.push_back(c(k, v));
    out.push_back(pt);
  }
  return out;
}

json edges_json(const Graph& g, const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [a, b] : edges) out.push_back({g.label(a), g.label(b)});
  return out;
}

json type_json(const Graph& g, const SymmetryGroup& s, const TypeAssignment& phi) {
  json out = json::object();
  for (const auto& [label, cycles] : describe_type(g, s, phi)) out[label] = cycles;
  return out;
}

json report_json(const RigidityReport& r) {
  return {{"rank", r.rank},
          {"rows", r.row_count},
          {"cols", r.col_count},
          {"expected_rank", r.expected_rank},
          {"affine_span_dim", r.affine_span_dim},
          {"trivial_dim", r.trivial_dim},
          {"infinitesimally_rigid", r.infinitesimally_rigid},
          {"independent", r.independent},
          {"isostatic", r.isostatic}};
}

std::string certainty(bool positive, int trials) {
  return positive ? "certified by witness" : "probabilistic: no witness in " + std::to_string(trials) + " trials";
}

json cmd_analyze(const Problem& p) {
  const TypeAssignment phi = resolve_type(p);
  json out;
  out["group"] = {{"name", p.group.name()}, {"order", p.group.order()}};
  out["type"] = type_json(p.graph, p.group, phi);
  out["homomorphism"] = is_homomorphism(p.group, phi);
  if (p.coords) {
    json given;
    given["in_class"] = verify_type(p.graph, *p.coords, p.group, phi, p.file.tol_geom);
    if (is_framework(p.graph, *p.coords, p.file.tol_geom)) {
      given["rigidity"] = report_json(rigidity_verdict({p.graph, *p.coords}, rigidity_options(p)));
    }
    out["given"] = given;
  }
  SymGenericOptions opts;
  opts.trials = p.file.trials;
  opts.seed = p.file.seed;
  opts.rigidity = rigidity_options(p);
  const SymGenericReport rep = sym_generic_verdict(p.graph, p.group, phi, opts);
  json sg;
  sg["k"] = rep.k;
  sg["empty"] = rep.empty;
  sg["offending_edges"] = edges_json(p.graph, rep.offending_edges);
  sg["samples_drawn"] = rep.samples_drawn;
  sg["max_rank"] = rep.max_rank;
  sg["expected_rank"] = rep.expected_rank;
  sg["ranks"] = rep.ranks;
  sg["rigid"] = {{"value", rep.rigid}, {"certainty", certainty(rep.rigid, rep.samples_drawn)}};
  sg["independent"] = {{"value", rep.independent}, {"certainty", certainty(rep.independent, rep.samples_drawn)}};
  sg["isostatic"] = {{"value", rep.isostatic}, {"certainty", certainty(rep.isostatic, rep.samples_drawn)}};
  if (rep.witness) {
    sg["witness"] = {{"trial", rep.witness_trial},
                     {"coordinates", coords_json(*rep.witness)},
                     {"rigidity", report_json(rep.witness_report)}};
  }
  out["sym_generic"] = sg;
  out["rigid"] = rep.rigid;
  out["independent"] = rep.independent;
  out["isostatic"] = rep.isostatic;
  return out;
}

json cmd_types(const Problem& p, bool normalized) {
  const Coordinates& c = need_coords(p, "types");
  const TypeEnumeration en = enumerate_types(p.graph, c, p.group, p.file.tol_geom, normalized);
  json aut = json::array();
  for (const auto& a : en.catalog.aut_gp) aut.push_back(a.to_cycles(p.graph.labels()));
  json types = json::array();
  json hom = json::array();
  for (const auto& t : en.types) {
    types.push_back(type_json(p.graph, p.group, t));
    hom.push_back(is_homomorphism(p.group, t));
  }
  return {{"aut_gp", aut},   {"aut_gp_order", en.catalog.aut_gp.size()}, {"normalized", normalized},
          {"count", en.types.size()}, {"types", types},                      {"homomorphism", hom}};
}

Framework sample(const Problem& p, const TypeAssignment& phi, bool orbit) {
  if (orbit) {
    const OrbitStructure os = orbit_structure(p.graph, p.group, phi);
    return orbit_sample(p.graph, os, p.group, phi, p.file.seed, kDefaultRetries, p.file.tol_geom);
  }
  const ConfigSpaceBasis b = config_space_basis(p.graph, p.group, phi);
  const EmptinessReport empty = class_is_empty(p.graph, b);
  if (empty.empty) {
    throw Error(ErrorCode::EmptyClass, "the class has no framework: bar {" + p.graph.label(empty.edges.front().first) +
                                           "," + p.graph.label(empty.edges.front().second) + "} always collapses");
  }
  return sample_config(p.graph, b, p.file.seed, kDefaultRetries, p.file.tol_geom);
}

json cmd_sample(const Problem& p, bool orbit) {
  const TypeAssignment phi = resolve_type(p);
  const Framework f = sample(p, phi, orbit);
  return {{"seed", p.file.seed}, {"vertices", p.graph.labels()}, {"coordinates", coords_json(f.coords)}};
}

json cmd_basis(const Problem& p) {
  const TypeAssignment phi = resolve_type(p);
  const ConfigSpaceBasis b = config_space_basis(p.graph, p.group, phi);
  json basis = json::array();
  for (int j = 0; j < b.k(); ++j) {
    json col = json::array();
    for (Eigen::Index i = 0; i < b.basis.rows(); ++i) col.push_back(b.basis(i, j));
    basis.push_back(col);
  }
  return {{"k", b.k()}, {"residual", basis_residual(b, p.group, phi)}, {"basis", basis}};
}

json cmd_empty(const Problem& p) {
  const TypeAssignment phi = resolve_type(p);
  const EmptinessReport rep = class_is_empty(p.graph, config_space_basis(p.graph, p.group, phi));
  return {{"empty", rep.empty}, {"edges", edges_json(p.graph, rep.edges)}};
}

std::string cmd_svg(const Problem& p, bool orbit) {
  Framework f{p.graph, p.coords ? *p.coords : Coordinates()};
  if (!p.coords) f = sample(p, resolve_type(p), orbit);
  SvgOptions opts;
  opts.group = p.group;
  opts.coincidence_tol = p.file.tol_geom;
  return render_svg(f, opts);
}

json cmd_oracle(const Problem& p, const std::string& which) {
  if (which == "types") {
    const auto types = oracle::brute_force_type_search(p.graph, need_coords(p, "oracle types"), p.group,
                                                       p.file.tol_geom);
    json list = json::array();
    for (const auto& t : types) list.push_back(type_json(p.graph, p.group, t));
    return {{"count", types.size()}, {"types", list}};
  }
  if (which == "generic") {
    if (!p.graph.is_complete()) throw Error(ErrorCode::BadParam, "the minor check runs on complete graphs");
    const TypeAssignment phi = resolve_type(p);
    return {{"generic", oracle::exhaustive_generic_check(need_coords(p, "oracle generic"), p.group, phi,
                                                         oracle::kDefaultEvaluations, oracle::kMinorTol, p.file.seed)}};
  }
  const TypeAssignment phi = resolve_type(p);
  const Eigen::MatrixXd m = symmetry_constraint_matrix(p.group, phi, p.graph.vertex_count());
  const ConfigSpaceBasis b = config_space_basis(p.graph, p.group, phi);
  return {{"nullity_exact", oracle::kernel_oracle(m)}, {"k", b.k()}};
}

void print_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric bar-joint framework analysis"};
  app.require_subcommand(1);
  Flags flags;
  std::string oracle_kind;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", flags.file, "JSON problem file")->required();
    sub->add_option("--seed", flags.seed, "Override the sampling seed");
    sub->add_option("--trials", flags.trials, "Number of samples for generic verdicts")->check(CLI::PositiveNumber);
    sub->add_option("--tol-rank", flags.tol_rank, "Relative SVD threshold for rank decisions");
    sub->add_option("--tol-geom", flags.tol_geom, "Distance below which points coincide");
    sub->add_option("--out", flags.out, "Write the report to this file instead of stdout");
  };
  auto* analyze = app.add_subcommand("analyze", "Rigidity of the given and of sampled class members");
  auto* sample_cmd = app.add_subcommand("sample", "Draw one member of the symmetric class");
  auto* types = app.add_subcommand("types", "List every type of the given coordinates");
  auto* basis = app.add_subcommand("basis", "Orthonormal basis of the symmetric configuration space");
  auto* empty = app.add_subcommand("empty-check", "Decide whether the class contains a framework");
  auto* svg = app.add_subcommand("svg", "Draw the framework as SVG");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-checks");
  for (auto* sub : {analyze, sample_cmd, types, basis, empty, svg}) add_common(sub);
  oracle_cmd->add_option("kind", oracle_kind, "types, generic or kernel")
      ->required()
      ->check(CLI::IsMember({"types", "generic", "kernel"}));
  add_common(oracle_cmd);
  types->add_flag("--normalized", flags.normalized, "Only types with Phi(Id) = id");
  sample_cmd->add_flag("--orbit", flags.orbit, "Sample orbit by orbit (homomorphic types only)");
  svg->add_flag("--orbit", flags.orbit, "Sample orbit by orbit when no coordinates are given");

  std::ostringstream usage;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "Usage", e.what());
    return kExitUsage;
  }

  std::optional<Problem> loaded;
  try {
    loaded = load(flags);
  } catch (const Error& e) {
    print_error(err, to_string(e.code()), e.what());
    return kExitUsage;
  }

  try {
    const Problem& p = *loaded;
    std::string text;
    if (analyze->parsed()) text = cmd_analyze(p).dump(2);
    if (sample_cmd->parsed()) text = cmd_sample(p, flags.orbit).dump(2);
    if (types->parsed()) text = cmd_types(p, flags.normalized).dump(2);
    if (basis->parsed()) text = cmd_basis(p).dump(2);
    if (empty->parsed()) text = cmd_empty(p).dump(2);
    if (svg->parsed()) text = cmd_svg(p, flags.orbit);
    if (oracle_cmd->parsed()) text = cmd_oracle(p, oracle_kind).dump(2);
    if (!text.empty() && text.back() != '\n') text += '\n';
    if (flags.out.empty()) {
      out << text;
    } else {
      std::ofstream file(flags.out, std::ios::binary);
      if (!(file << text)) {
        print_error(err, "IoError", "cannot write " + flags.out);
        return kExitUsage;
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    print_error(err, to_string(e.code()), e.what());
    return kExitDomain;
  }
}

}  // namespace symrig
