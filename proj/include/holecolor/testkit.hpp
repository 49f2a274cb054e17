#pragma once

#include <optional>
#include <vector>

#include "holecolor/graph.hpp"

namespace holecolor {

/// Canonical form of a cycle: rotated to start at its smallest vertex and
/// oriented so the second vertex is below the last.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

/// The lexicographically least odd hole (canonical form) by depth-first search
/// over induced paths, or none. Throws SizeRefusal above max_n vertices.
std::optional<Path> find_odd_hole_brute(const Graph& g, int max_n = 64);

/// Same answer as find_odd_hole_brute, by checking every vertex subset of odd
/// size >= 5. Only for tiny graphs.
std::optional<Path> find_odd_hole_subsets(const Graph& g, int max_n = 12);

/// Exact chromatic number by DSATUR branch and bound.
int exact_chromatic(const Graph& g, int max_n = 40);

/// Exact chromatic number by plain backtracking over colour assignments in
/// vertex order. Independent of exact_chromatic; tiny graphs only.
int chromatic_exhaustive(const Graph& g, int max_n = 10);

/// Any proper colouring with exact_chromatic(g) colours, as colour per vertex.
std::vector<int> optimal_coloring(const Graph& g, int max_n = 40);

/// a1 - c1 and a2 - c2 are edges, a1 - c2 and a2 - c1 are not.
struct StepWitness {
  Vertex a1;
  Vertex c1;
  Vertex a2;
  Vertex c2;
};

/// Greedy construction: a1 has the most neighbours in c, c2 in c misses a1,
/// a2 in a sees c2, c1 in c sees a1 but not a2; ties go to the smallest id.
/// Throws std::invalid_argument when c is not a maximum clique, meets a, or
/// has a vertex with no neighbour in a.
StepWitness step_witness(const Graph& g, const VertexSet& c, const VertexSet& a);

}  // namespace holecolor
