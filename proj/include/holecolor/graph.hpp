#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holecolor {

using Vertex = int;

// Sorted ascending, no duplicates. Every routine that returns a VertexSet
// keeps that order so outputs are reproducible.
using VertexSet = std::vector<Vertex>;

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, Vertex u, Vertex v)
      : std::invalid_argument(what), u_(u), v_(v) {}
  Vertex u() const { return u_; }
  Vertex v() const { return v_; }

 private:
  Vertex u_;
  Vertex v_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held twice: a dense n*n matrix for constant-time queries and
/// sorted neighbour lists for iteration.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on an out-of-range id or a self-loop. Duplicate and
  /// reversed pairs collapse to one edge.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, const EdgeList& edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges)) {}

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const VertexSet& neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool valid(Vertex v) const { return v >= 0 && v < n_; }

  /// All edges (u, v) with u < v, lexicographic.
  EdgeList edges() const;
  VertexSet vertices() const;

  /// Subgraph induced on `s`; vertex i of the result is s[i].
  Graph induced(const VertexSet& s) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<char> matrix_;
  std::vector<VertexSet> adj_;
};

/// A vertex sequence in which consecutive vertices are adjacent.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  int parity() const { return static_cast<int>(length() % 2); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

// Vertex-set algebra on sorted vectors.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
VertexSet make_set(std::vector<Vertex> vs);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);
/// Vertices of `s` with at least one neighbour in `t`.
VertexSet with_neighbour_in(const Graph& g, const VertexSet& s,
                            const VertexSet& t);

/// Partition of `s` into the vertex sets of the components of G[s], each
/// ascending, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g);

/// Lexicographically smallest maximum clique of G[s].
VertexSet max_clique(const Graph& g, const VertexSet& s);
VertexSet max_clique(const Graph& g);
int clique_number(const Graph& g, const VertexSet& s);

/// Every clique of exactly `w` vertices inside `s`, lexicographic.
std::vector<VertexSet> cliques_of_size(const Graph& g, const VertexSet& s,
                                       int w);
bool has_clique_of_size(const Graph& g, const VertexSet& s, int w);

/// Shortest u-v path in G[{u, v} + allowed_interior], breadth-first with
/// ascending neighbour order. Such a path is induced in G.
std::optional<Path> shortest_path_within(const Graph& g, Vertex u, Vertex v,
                                         const VertexSet& allowed_interior);

/// True when consecutive vertices are adjacent, vertices are distinct and no
/// other pair is adjacent.
bool is_induced_path(const Graph& g, const Path& p);

}  // namespace holecolor
