#include "symrig/problem.hpp"

#include <set>

#include "json.hpp"

#include "symrig/error.hpp"

namespace symrig {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) parse_error("unknown field \"" + key + "\" in " + where);
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) parse_error("missing field \"" + std::string(key) + "\" in " + where);
  return obj.at(key);
}

template <typename T>
T get_as(const json& value, const std::string& what) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    parse_error(what + " has the wrong type");
  }
}

Eigen::Vector3d get_vector3(const json& value, const std::string& what) {
  const auto v = get_as<std::vector<double>>(value, what);
  if (v.size() != 3) parse_error(what + " must have three entries");
  return {v[0], v[1], v[2]};
}

GroupParams parse_params(const json& obj) {
  if (!obj.is_object()) parse_error("group.params must be an object");
  reject_unknown(obj, {"m", "mirror_angle", "axis", "azimuth", "dihedral_mirror_angle", "normal"}, "group.params");
  GroupParams p;
  if (obj.contains("m")) p.m = get_as<int>(obj["m"], "group.params.m");
  if (obj.contains("mirror_angle")) p.mirror_angle = get_as<double>(obj["mirror_angle"], "group.params.mirror_angle");
  if (obj.contains("axis")) p.axis = get_vector3(obj["axis"], "group.params.axis");
  if (obj.contains("azimuth")) p.azimuth = get_as<double>(obj["azimuth"], "group.params.azimuth");
  if (obj.contains("dihedral_mirror_angle")) {
    p.dihedral_mirror_angle = get_as<double>(obj["dihedral_mirror_angle"], "group.params.dihedral_mirror_angle");
  }
  if (obj.contains("normal")) p.normal = get_vector3(obj["normal"], "group.params.normal");
  return p;
}

json params_to_json(const GroupParams& p) {
  json out = json::object();
  if (p.m) out["m"] = *p.m;
  if (p.mirror_angle) out["mirror_angle"] = *p.mirror_angle;
  if (p.axis) out["axis"] = {(*p.axis)[0], (*p.axis)[1], (*p.axis)[2]};
  if (p.azimuth) out["azimuth"] = *p.azimuth;
  if (p.dihedral_mirror_angle) out["dihedral_mirror_angle"] = *p.dihedral_mirror_angle;
  if (p.normal) out["normal"] = {(*p.normal)[0], (*p.normal)[1], (*p.normal)[2]};
  return out;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) parse_error("problem file must be a JSON object");
  reject_unknown(root, {"graph", "dimension", "group", "type", "coordinates", "seed", "trials", "tolerances"},
                 "problem");

  ProblemFile f;
  const json& graph = require(root, "graph", "problem");
  if (!graph.is_object()) parse_error("graph must be an object");
  reject_unknown(graph, {"vertices", "edges"}, "graph");
  f.vertices = get_as<std::vector<std::string>>(require(graph, "vertices", "graph"), "graph.vertices");
  if (graph.contains("edges")) {
    for (const auto& e : graph["edges"]) {
      const auto ends = get_as<std::vector<std::string>>(e, "edge");
      if (ends.size() != 2) parse_error("every edge needs exactly two endpoints");
      f.edges.emplace_back(ends[0], ends[1]);
    }
  }
  f.dimension = get_as<int>(require(root, "dimension", "problem"), "dimension");

  const json& group = require(root, "group", "problem");
  if (!group.is_object()) parse_error("group must be an object");
  reject_unknown(group, {"schoenflies", "params", "generators"}, "group");
  if (group.contains("schoenflies") == group.contains("generators")) {
    parse_error("group needs exactly one of \"schoenflies\" and \"generators\"");
  }
  if (group.contains("schoenflies")) f.schoenflies = get_as<std::string>(group["schoenflies"], "group.schoenflies");
  if (group.contains("params")) f.params = parse_params(group["params"]);
  if (group.contains("generators")) {
    f.generators = get_as<std::vector<std::vector<std::vector<double>>>>(group["generators"], "group.generators");
  }

  if (root.contains("type")) {
    const json& type = root["type"];
    if (type.is_string()) {
      const auto mode = type.get<std::string>();
      if (mode == "auto") {
        f.type_mode = TypeMode::Auto;
      } else if (mode == "enumerate") {
        f.type_mode = TypeMode::Enumerate;
      } else {
        parse_error("type must be \"auto\", \"enumerate\" or an object");
      }
    } else if (type.is_object()) {
      f.type_mode = TypeMode::Explicit;
      for (const auto& [label, cycles] : type.items()) {
        f.type_map.emplace_back(label, get_as<std::string>(cycles, "type." + label));
      }
    } else {
      parse_error("type must be \"auto\", \"enumerate\" or an object");
    }
  }
  if (root.contains("coordinates")) {
    f.coordinates = get_as<std::vector<std::vector<double>>>(root["coordinates"], "coordinates");
  }
  if (root.contains("seed")) f.seed = get_as<std::uint64_t>(root["seed"], "seed");
  if (root.contains("trials")) f.trials = get_as<int>(root["trials"], "trials");
  if (root.contains("tolerances")) {
    const json& tol = root["tolerances"];
    if (!tol.is_object()) parse_error("tolerances must be an object");
    reject_unknown(tol, {"rank", "geom"}, "tolerances");
    if (tol.contains("rank")) f.tol_rank = get_as<double>(tol["rank"], "tolerances.rank");
    if (tol.contains("geom")) f.tol_geom = get_as<double>(tol["geom"], "tolerances.geom");
  }

  // Validate everything that can be checked without coordinates.
  instantiate(f);
  return f;
}

std::string serialize_problem(const ProblemFile& f) {
  json root;
  json edges = json::array();
  for (const auto& [a, b] : f.edges) edges.push_back({a, b});
  root["graph"] = {{"vertices", f.vertices}, {"edges", edges}};
  root["dimension"] = f.dimension;
  json group = json::object();
  if (f.schoenflies) group["schoenflies"] = *f.schoenflies;
  if (!f.generators.empty()) group["generators"] = f.generators;
  if (f.params != GroupParams{}) group["params"] = params_to_json(f.params);
  root["group"] = group;
  switch (f.type_mode) {
    case TypeMode::Auto:
      root["type"] = "auto";
      break;
    case TypeMode::Enumerate:
      root["type"] = "enumerate";
      break;
    case TypeMode::Explicit: {
      json type = json::object();
      for (const auto& [label, cycles] : f.type_map) type[label] = cycles;
      root["type"] = type;
      break;
    }
  }
  if (f.coordinates) root["coordinates"] = *f.coordinates;
  root["seed"] = f.seed;
  root["trials"] = f.trials;
  root["tolerances"] = {{"rank", f.tol_rank}, {"geom", f.tol_geom}};
  return root.dump(2);
}

Graph build_graph(const ProblemFile& f) {
  std::set<std::string> names(f.vertices.begin(), f.vertices.end());
  if (names.size() != f.vertices.size()) parse_error("vertex names must be distinct");
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < f.vertices.size(); ++i)
      if (f.vertices[i] == name) return static_cast<int>(i);
    parse_error("edge refers to unknown vertex \"" + name + "\"");
  };
  std::vector<Edge> edges;
  for (const auto& [a, b] : f.edges) edges.emplace_back(index(a), index(b));
  try {
    return Graph(static_cast<int>(f.vertices.size()), std::move(edges), f.vertices);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadParam) parse_error(e.what());
    throw;
  }
}

SymmetryGroup build_group(const ProblemFile& f) {
  if (f.dimension != 2 && f.dimension != 3) {
    throw Error(ErrorCode::UnknownGroup, "groups are available in dimensions 2 and 3 only");
  }
  try {
    if (f.schoenflies) return schoenflies_group(*f.schoenflies, f.dimension, f.params);
    std::vector<Eigen::MatrixXd> gens;
    for (const auto& rows : f.generators) {
      Eigen::MatrixXd m(f.dimension, f.dimension);
      if (static_cast<int>(rows.size()) != f.dimension) parse_error("generator has the wrong number of rows");
      for (int i = 0; i < f.dimension; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != f.dimension) {
          parse_error("generator has the wrong number of columns");
        }
        for (int j = 0; j < f.dimension; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
      gens.push_back(m);
    }
    return close_group(gens, kMaxGroupOrder, "custom");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::UnknownGroup, e.what());
  }
}

Problem instantiate(const ProblemFile& f) {
  Problem p;
  p.file = f;
  p.graph = build_graph(f);
  p.group = build_group(f);
  const int n = p.graph.vertex_count();
  if (f.coordinates) {
    if (static_cast<int>(f.coordinates->size()) != n) parse_error("coordinates must list one point per vertex");
    Coordinates c(f.dimension, n);
    for (int v = 0; v < n; ++v) {
      const auto& pt = (*f.coordinates)[static_cast<std::size_t>(v)];
      if (static_cast<int>(pt.size()) != f.dimension) parse_error("coordinate of wrong dimension");
      for (int k = 0; k < f.dimension; ++k) c(k, v) = pt[static_cast<std::size_t>(k)];
    }
    p.coords = c;
  }
  if (f.type_mode == TypeMode::Explicit) {
    TypeAssignment phi;
    phi.images.assign(static_cast<std::size_t>(p.group.order()), Permutation::identity(n));
    for (const auto& [label, cycles] : f.type_map) {
      const int x = p.group.find_label(label);
      if (x < 0) {
        throw Error(ErrorCode::BadPermutation, "type names unknown group element \"" + label + "\"");
      }
      phi.images[static_cast<std::size_t>(x)] = Permutation::from_cycles(cycles, p.graph.labels());
    }
    // Elements left out of the map, including the identity, default to id.
    check_type_shape(p.graph, p.group, phi);
    p.type = std::move(phi);
  }
  return p;
}

}  // namespace symrig
