#include "symrig/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "symrig/error.hpp"

namespace symrig {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int w : images_) {
    if (w < 0 || w >= size() || seen[static_cast<std::size_t>(w)]) {
      throw Error(ErrorCode::BadPermutation, "image sequence is not a bijection");
    }
    seen[static_cast<std::size_t>(w)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::span<const std::string> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto resolve = [&](std::string_view name) {
    for (int v = 0; v < n; ++v) {
      if (labels[static_cast<std::size_t>(v)] == name) return v;
    }
    throw Error(ErrorCode::BadPermutation, "unknown vertex '" + std::string(name) + "' in cycle notation");
  };

  std::string_view rest = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  rest = trim(rest);
  if (rest.empty() || rest == "id" || rest == "()") return Permutation(std::move(images));

  while (!rest.empty()) {
    if (rest.front() != '(') {
      throw Error(ErrorCode::BadPermutation, "expected '(' in cycle notation: " + std::string(text));
    }
    const auto close = rest.find(')');
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::BadPermutation, "unterminated cycle: " + std::string(text));
    }
    std::string body(rest.substr(1, close - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream tokens(body);
    std::vector<int> cycle;
    for (std::string tok; tokens >> tok;) {
      const int v = resolve(tok);
      if (used[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::BadPermutation, "vertex '" + tok + "' appears twice in " + std::string(text));
      }
      used[static_cast<std::size_t>(v)] = 1;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    rest = trim(rest.substr(close + 1));
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if ((*this)(v) != v) return false;
  }
  return true;
}

int Permutation::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(images_.size(), 0);
  long long result = 1;
  for (int v = 0; v < size(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    long long len = 0;
    for (int w = v; !seen[static_cast<std::size_t>(w)]; w = (*this)(w)) {
      seen[static_cast<std::size_t>(w)] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return static_cast<int>(result);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int v = 0; v < size(); ++v) inv[static_cast<std::size_t>((*this)(v))] = v;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) {
    throw Error(ErrorCode::LengthMismatch, "composing permutations of different lengths");
  }
  std::vector<int> out(images_.size());
  for (int v = 0; v < size(); ++v) out[static_cast<std::size_t>(v)] = (*this)(other(v));
  return Permutation(std::move(out));
}

std::string Permutation::to_cycles(std::span<const std::string> labels, bool include_fixed) const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> fixed;
  for (int v = 0; v < size(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    if ((*this)(v) == v) {
      fixed.push_back(v);
      seen[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    out += '(';
    for (int w = v; !seen[static_cast<std::size_t>(w)]; w = (*this)(w)) {
      seen[static_cast<std::size_t>(w)] = 1;
      if (w != v) out += ' ';
      out += labels[static_cast<std::size_t>(w)];
    }
    out += ')';
  }
  if (include_fixed) {
    for (int v : fixed) out += "(" + labels[static_cast<std::size_t>(v)] + ")";
  }
  if (out.empty()) out = "id";
  return out;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
  if (n_ < 1) throw Error(ErrorCode::BadParam, "a graph needs at least one vertex");
  if (labels_.empty()) {
    for (int v = 0; v < n_; ++v) labels_.push_back("v" + std::to_string(v + 1));
  }
  if (static_cast<int>(labels_.size()) != n_) {
    throw Error(ErrorCode::LengthMismatch, "label count does not match vertex count");
  }
  adj_.assign(static_cast<std::size_t>(n_ * n_), 0);
  degree_.assign(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw Error(ErrorCode::BadParam, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at " + labels_[static_cast<std::size_t>(u)]);
    if (u > v) std::swap(u, v);
    if (adj_[static_cast<std::size_t>(u * n_ + v)]) {
      throw Error(ErrorCode::BadParam, "duplicate edge {" + labels_[static_cast<std::size_t>(u)] + "," +
                                           labels_[static_cast<std::size_t>(v)] + "}");
    }
    adj_[static_cast<std::size_t>(u * n_ + v)] = adj_[static_cast<std::size_t>(v * n_ + u)] = 1;
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

int Graph::index_of(std::string_view label) const {
  for (int v = 0; v < n_; ++v) {
    if (labels_[static_cast<std::size_t>(v)] == label) return v;
  }
  return -1;
}

bool is_automorphism(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.vertex_count()) {
    throw Error(ErrorCode::LengthMismatch, "permutation length " + std::to_string(sigma.size()) +
                                               " does not match vertex count " +
                                               std::to_string(g.vertex_count()));
  }
  // sigma is a bijection, so mapping every edge to an edge maps E onto E.
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(sigma(u), sigma(v))) return false;
  }
  return true;
}

namespace {

struct AutomorphismSearch {
  const Graph& g;
  const std::function<bool(int, int)>& compatible;
  std::vector<int> image;
  std::vector<char> used;
  std::vector<Permutation> found;

  void extend(int v) {
    const int n = g.vertex_count();
    if (v == n) {
      found.emplace_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || g.degree(v) != g.degree(w)) continue;
      if (compatible && !compatible(v, w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = g.adjacent(u, v) == g.adjacent(image[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      extend(v + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  }
};

}  // namespace

std::vector<Permutation> search_automorphisms(const Graph& g,
                                              const std::function<bool(int, int)>& compatible,
                                              int cap) {
  if (g.vertex_count() > cap) {
    throw Error(ErrorCode::CapExceeded, "automorphism search capped at " + std::to_string(cap) +
                                            " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  AutomorphismSearch search{g, compatible, std::vector<int>(static_cast<std::size_t>(g.vertex_count())),
                            std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0), {}};
  search.extend(0);
  return std::move(search.found);
}

std::vector<Permutation> automorphisms(const Graph& g, int cap) {
  return search_automorphisms(g, {}, cap);
}

std::vector<Permutation> coincidence_automorphisms(const Graph& g, const Coordinates& p, double tol,
                                                   int cap) {
  if (p.cols() != g.vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinates do not cover every vertex");
  }
  return search_automorphisms(
      g, [&](int v, int w) { return (p.col(v) - p.col(w)).norm() <= tol; }, cap);
}

}  // namespace symrig

namespace symrig {

std::vector<Edge> coincident_bars(const Graph& g, const Coordinates& p, double tol) {
  if (p.cols() != g.vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinates do not cover every vertex");
  }
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    if ((p.col(u) - p.col(v)).norm() <= tol) out.emplace_back(u, v);
  }
  return out;
}

bool is_framework(const Graph& g, const Coordinates& p, double tol) {
  return coincident_bars(g, p, tol).empty();
}

}  // namespace symrig
