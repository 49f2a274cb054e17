#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holecolor/graph.hpp"

namespace holecolor {

/// A sequence of disjoint vertex sets (L_0, ..., L_k) over a graph.
///
/// The object does not enforce the levelling conditions on construction so
/// that broken inputs can be represented and diagnosed with
/// validate_levelling(). The graph must outlive the levelling.
class Levelling {
 public:
  Levelling(const Graph& g, std::vector<VertexSet> levels);
  Levelling(Graph&&, std::vector<VertexSet>) = delete;

  const Graph& graph() const { return *g_; }
  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const VertexSet& level(int i) const { return levels_[i]; }
  std::span<const VertexSet> levels() const { return levels_; }

  /// -1 when v is not in any level.
  int level_of(Vertex v) const { return index_[v]; }
  bool contains(Vertex v) const { return index_[v] >= 0; }

  /// Union of L_0, ..., L_{t-1}.
  VertexSet union_below(int t) const;
  VertexSet all_vertices() const { return union_below(top() + 1); }

  VertexSet parents(Vertex v) const;
  VertexSet children(Vertex v) const;
  /// Children of v whose only parent is v.
  VertexSet dependents(Vertex v) const;

  Levelling with_level(int i, VertexSet s) const;
  /// Levels 0..k.
  Levelling truncated(int k) const;

 private:
  const Graph* g_;
  std::vector<VertexSet> levels_;
  std::vector<int> index_;
};

/// BFS layers from `root`, restricted to `within` when given.
Levelling bfs_levelling(const Graph& g, Vertex root);
Levelling bfs_levelling(const Graph& g, Vertex root, const VertexSet& within);
Levelling bfs_levelling(Graph&&, Vertex) = delete;
Levelling bfs_levelling(Graph&&, Vertex, const VertexSet&) = delete;

struct LevellingViolation {
  enum class Kind { kRootNotSingleton, kOverlap, kNoParent, kLongEdge };
  Kind kind;
  int level = -1;
  Vertex v = -1;
  Vertex w = -1;

  std::string message() const;
};

std::optional<LevellingViolation> validate_levelling(const Levelling& lv);

/// Deletes, one at a time, the largest-id vertex in an enforced level that
/// has no dependent, until every such vertex has one. Level 0 and the top
/// level are never touched.
Levelling prune_for_dependents(const Levelling& lv,
                               const std::vector<int>& levels_to_enforce);

/// Drops from L_{k-1} every vertex with no neighbour in L_k.
Levelling prune_unanchored(const Levelling& lv);

/// Replaces L_k by `comp`, which must be a component of G[L_k].
Levelling restrict_top(const Levelling& lv, const VertexSet& comp);

struct ParentRuleViolation {
  Vertex u;
  Vertex v;
  Vertex parent;  // parent of exactly one of u, v
};

/// Checks that adjacent vertices of L_i have equal parent sets for
/// 1 <= i <= upto.
std::optional<ParentRuleViolation> check_parent_rule(const Levelling& lv,
                                                     int upto);

/// s_0 - s_1 - ... - s_k with s_i the smallest dependent of s_{i-1}.
/// Throws std::logic_error when some s_{i-1} has no dependent.
Path spine(const Levelling& lv);

/// Graph on one stable level L_t whose edges are the pairs joined by an odd
/// witness path with interior in L_0 + ... + L_{t-1}.
struct ParityGraph {
  VertexSet vertices;  // L_t; graph vertex i is vertices[i]
  Graph graph;
  std::map<std::pair<Vertex, Vertex>, Path> witness;  // keyed (u, v), u < v

  bool odd(Vertex u, Vertex v) const;
};

ParityGraph parity_graph(const Levelling& lv, int t);

/// Number of edges of `p` whose ends lie in the same level.
int sibling_edges(const Levelling& lv, const Path& p);

}  // namespace holecolor
