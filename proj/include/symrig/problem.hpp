#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symrig/classification.hpp"
#include "symrig/graph.hpp"
#include "symrig/linalg.hpp"
#include "symrig/sym_generic.hpp"
#include "symrig/symmetry_group.hpp"

namespace symrig {

enum class TypeMode { Auto, Enumerate, Explicit };

// Plain-data image of a JSON problem file, kept exactly as written.
// serialize_problem(parse_problem(t)) parses back equal.
//
// {
//   "graph": {"vertices": ["v1", ...], "edges": [["v1", "v2"], ...]},
//   "dimension": 2,
//   "group": {"schoenflies": "Cs", "params": {"mirror_angle": 1.5708}}
//            or {"generators": [[[row], [row]], ...]},
//   "type": "auto" | "enumerate" | {"<element label>": "<cycles>", ...},
//   "coordinates": [[x, y], ...],
//   "seed": 7, "trials": 20, "tolerances": {"rank": 1e-8, "geom": 1e-9}
// }
struct ProblemFile {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  int dimension = 2;
  std::optional<std::string> schoenflies;
  GroupParams params;
  std::vector<std::vector<std::vector<double>>> generators;
  TypeMode type_mode = TypeMode::Auto;
  std::vector<std::pair<std::string, std::string>> type_map;  // element label -> cycles
  std::optional<std::vector<std::vector<double>>> coordinates;
  std::uint64_t seed = 0;
  int trials = kDefaultTrials;
  double tol_rank = kDefaultRankTol;
  double tol_geom = kDefaultCoincidenceTol;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

// The objects a problem file describes.
struct Problem {
  ProblemFile file;
  Graph graph;
  SymmetryGroup group;
  std::optional<Coordinates> coords;
  std::optional<TypeAssignment> type;  // set when the file gives an explicit map
};

// Throws ParseError for malformed JSON, missing or unknown fields;
// UnknownGroup for names outside the catalog; SelfLoop; BadPermutation.
ProblemFile parse_problem(std::string_view text);
std::string serialize_problem(const ProblemFile& file);

// Builds the graph, group, coordinates and explicit type.
Problem instantiate(const ProblemFile& file);
inline Problem load_problem(std::string_view text) { return instantiate(parse_problem(text)); }

Graph build_graph(const ProblemFile& file);
SymmetryGroup build_group(const ProblemFile& file);

}  // namespace symrig
