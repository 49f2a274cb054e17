#pragma once

#include <array>
#include <iosfwd>
#include <variant>
#include <vector>

#include "holecolor/graph.hpp"

namespace holecolor {

/// Union/join decomposition of a cograph.
///
/// Canonical form: internal nodes have at least two children, a Union never
/// has a Union child, a Join never has a Join child, and children are ordered
/// by their smallest leaf.
struct Cotree {
  enum class Kind { kLeaf, kUnion, kJoin };

  Kind kind = Kind::kLeaf;
  Vertex leaf = -1;
  std::vector<Cotree> children;

  static Cotree make_leaf(Vertex v) { return Cotree{Kind::kLeaf, v, {}}; }

  VertexSet leaves() const;
  friend bool operator==(const Cotree&, const Cotree&) = default;
};

/// Induced three-edge path a-b-c-d: edges exactly ab, bc, cd.
struct P4Witness {
  std::array<Vertex, 4> path;
  friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

using CotreeResult = std::variant<Cotree, P4Witness>;

/// Cotree of G[s], or an induced P4 inside s when G[s] is not a cograph.
/// Leaves carry the original vertex ids. `s` must be non-empty.
CotreeResult build_cotree(const Graph& g, const VertexSet& s);
CotreeResult build_cotree(const Graph& h);

bool is_p4(const Graph& g, const P4Witness& w);

/// Partition of the leaves into cotree_omega(t) stable sets.
std::vector<VertexSet> cograph_color(const Cotree& t);
int cotree_omega(const Cotree& t);

/// Adjacency implied by `t`: two leaves are adjacent iff their lowest common
/// ancestor is a Join.
bool cotree_adjacent(const Cotree& t, Vertex u, Vertex v);

/// Structural check of canonical form plus agreement with `g` on every pair.
bool cotree_represents(const Cotree& t, const Graph& g, const VertexSet& s);

void write_dot(std::ostream& out, const Cotree& t);

}  // namespace holecolor
