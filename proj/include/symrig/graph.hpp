#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace symrig {

// Coordinates of a configuration: a d x n matrix whose column v is p(v).
// Column-major storage makes the flat view (p_1, ..., p_n) in R^{dn} free.
using Coordinates = Eigen::MatrixXd;

inline constexpr int kDefaultAutomorphismCap = 12;
inline constexpr double kDefaultCoincidenceTol = 1e-9;

// A bijection on {0, ..., n-1}. Vertex v is sent to images()[v].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  // Parses cycle notation such as "(v1 v2)(v5 v6)(v3)". Accepts "id", "()"
  // and "" for the identity. Names are resolved against `labels`.
  static Permutation from_cycles(std::string_view text, std::span<const std::string> labels);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int order() const;
  Permutation inverse() const;

  // Composition (this o other): apply `other` first.
  Permutation after(const Permutation& other) const;
  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.after(b); }

  // Non-trivial cycles ordered by smallest member. With `include_fixed`,
  // fixed points follow as 1-cycles, e.g. "(v1 v2)(v5 v6)(v3)(v4)".
  // Without it the identity prints as "id".
  std::string to_cycles(std::span<const std::string> labels, bool include_fixed = false) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with optional display labels
// (default "v1".."vn").
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  static Graph complete(int n);
  static Graph cycle(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  int index_of(std::string_view label) const;  // -1 when absent

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u * n_ + v)] != 0; }
  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
  bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<char> adj_;
  std::vector<int> degree_;
};

bool is_automorphism(const Graph& g, const Permutation& sigma);

// Backtracking over vertex images in index order. `compatible(v, w)` may veto
// sending v to w; the adjacency and degree checks are always applied. Results
// come out in lexicographic order of the image sequence.
std::vector<Permutation> search_automorphisms(const Graph& g,
                                              const std::function<bool(int, int)>& compatible,
                                              int cap = kDefaultAutomorphismCap);

std::vector<Permutation> automorphisms(const Graph& g, int cap = kDefaultAutomorphismCap);

// Aut(G,p): automorphisms alpha with |p(v) - p(alpha(v))| <= tol for all v.
std::vector<Permutation> coincidence_automorphisms(const Graph& g, const Coordinates& p,
                                                   double tol = kDefaultCoincidenceTol,
                                                   int cap = kDefaultAutomorphismCap);

}  // namespace symrig

namespace symrig {

// Adjacent vertices sit more than `tol` apart.
bool is_framework(const Graph& g, const Coordinates& p, double tol = kDefaultCoincidenceTol);

// Edges whose endpoints sit within `tol` of each other.
std::vector<Edge> coincident_bars(const Graph& g, const Coordinates& p, double tol = kDefaultCoincidenceTol);

}  // namespace symrig
