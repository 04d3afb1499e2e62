#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <Eigen/QR>

#include "symrig/error.hpp"

namespace symrig::testing {

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(SYMRIG_FIXTURE_DIR)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Problem fixture(const std::string& name) {
  const std::string path = std::string(SYMRIG_FIXTURE_DIR) + "/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return load_problem(s.str());
}

TypeAssignment fixture_type(const Problem& p) {
  if (!p.type) throw std::runtime_error("fixture has no explicit type");
  return *p.type;
}

Eigen::MatrixXd random_orthogonal(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd a(d, d);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  return qr.householderQ();
}

Coordinates random_coords(int d, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Coordinates p(d, n);
  for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = unit(rng);
  return p;
}

FreeOrbitInstance random_free_orbit_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static const std::vector<std::pair<std::string, int>> kGroups = {
      {"C2", 2}, {"C3", 2}, {"Cs", 2}, {"C4", 2}, {"C2v", 2}, {"Cs", 3}, {"C2", 3}, {"C3", 3}, {"Ci", 3}};
  const auto& [name, dim] = kGroups[rng() % kGroups.size()];
  FreeOrbitInstance inst;
  inst.group = schoenflies_group(name, dim);
  const int order = inst.group.order();
  const int orbits = std::max(1, std::min(3, 12 / order - static_cast<int>(rng() % 2)));
  const int n = orbits * order;
  auto vertex = [order](int i, int x) { return i * order + x; };

  for (int y = 0; y < order; ++y) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < orbits; ++i)
      for (int x = 0; x < order; ++x) images[static_cast<std::size_t>(vertex(i, x))] = vertex(i, inst.group.product(y, x));
    inst.type.images.emplace_back(std::move(images));
  }

  std::set<Edge> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int seeds = n / 2 + 1;
  for (int e = 0; e < seeds; ++e) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u == v) continue;
    for (int y = 0; y < order; ++y) {
      int a = inst.type(y)(u);
      int b = inst.type(y)(v);
      if (a > b) std::swap(a, b);
      edges.insert({a, b});
    }
  }
  inst.graph = Graph(n, std::vector<Edge>(edges.begin(), edges.end()));

  const OrbitStructure os = orbit_structure(inst.graph, inst.group, inst.type);
  inst.coords = orbit_sample(inst.graph, os, inst.group, inst.type, rng()).coords;
  return inst;
}

}  // namespace symrig::testing
