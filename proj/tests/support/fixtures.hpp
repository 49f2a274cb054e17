#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "holecolor/generators.hpp"
#include "holecolor/graph.hpp"
#include "holecolor/levelling.hpp"

namespace holecolor::testing {

Graph cycle(int n);
Graph path_graph(int n);
Graph complete(int n);
Graph star(int leaves);                 // centre 0
Graph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1
Graph petersen();
Graph from_mask(int n, std::uint32_t mask);  // bit i = i-th pair in (u<v) order

/// Seeded G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

/// Every induced u-v path whose interior lies in `interior`, by DFS.
void for_each_induced_path(const Graph& g, Vertex u, Vertex v,
                           const VertexSet& interior,
                           const std::function<void(const Path&)>& fn);

/// Odd-hole-free graphs drawn from several seeded sources: G(n, p) filtered
/// by the detector, sparse bipartite graphs, complements of bipartite
/// graphs and line graphs of bipartite graphs.
std::vector<Graph> odd_hole_free_sample(int count, int max_n, std::uint64_t seed);

}  // namespace holecolor::testing

namespace holecolor::testing {

/// Input for split_cliques drawn from a real levelling: a is a stable level
/// t with the parent rule below it, b a component of level t+1, h the parity
/// graph of a and w the clique number of g.
struct SplitCase {
  Graph g;
  VertexSet a;
  Graph h;
  VertexSet b;
  int w = 0;
};

/// Tries a few levels of a random graph; none if no level qualifies.
std::optional<SplitCase> split_case(std::uint64_t seed);

}  // namespace holecolor::testing
