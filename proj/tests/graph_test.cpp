#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "holecolor/graph.hpp"
#include "holecolor/levelling.hpp"

namespace holecolor {
namespace {

using testing::complete;
using testing::cycle;
using testing::path_graph;

TEST(BuildGraph, TriangleHasThreeEdges) {
  const Graph g(3, EdgeList{{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(is_clique(g, {0, 1, 2}));
}

TEST(BuildGraph, NoEdgesMeansIsolatedVertices) {
  const Graph g(4, EdgeList{});
  EXPECT_EQ(g.size(), 0u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 0);
}

TEST(BuildGraph, FiveCycle) {
  const Graph g = cycle(5);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_TRUE(g.adjacent(4, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraph, DuplicatesAndReversedPairsCollapse) {
  const Graph g(3, EdgeList{{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.size(), 1u);
}

TEST(BuildGraph, RejectsSelfLoopWithThePair) {
  try {
    Graph(3, EdgeList{{0, 1}, {2, 2}});
    FAIL() << "self-loop accepted";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.u(), 2);
    EXPECT_EQ(e.v(), 2);
  }
}

TEST(BuildGraph, RejectsOutOfRangeId) {
  EXPECT_THROW(Graph(3, EdgeList{{0, 3}}), GraphError);
  EXPECT_THROW(Graph(3, EdgeList{{-1, 0}}), GraphError);
}

TEST(BuildGraph, AdjacencyIsSymmetricAndIrreflexive) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = testing::random_graph(12, 0.4, seed);
    for (Vertex u = 0; u < g.order(); ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.order(); ++v) {
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
      }
    }
  }
}

TEST(Components, SixCycleIsOneComponent) {
  const auto c = components(cycle(6), {0, 1, 2, 3, 4, 5});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].size(), 6u);
}

TEST(Components, NonAdjacentPairSplits) {
  EXPECT_EQ(components(cycle(5), {1, 4}), (std::vector<VertexSet>{{1}, {4}}));
}

TEST(Components, EmptySetHasNone) {
  EXPECT_TRUE(components(cycle(5), {}).empty());
}

TEST(Components, PartitionWithNoCrossingEdges) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = testing::random_graph(14, 0.15, seed);
    const auto parts = components(g);
    VertexSet all;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      all = set_union(all, parts[i]);
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        EXPECT_TRUE(sets_disjoint(parts[i], parts[j]));
        EXPECT_TRUE(with_neighbour_in(g, parts[i], parts[j]).empty());
      }
    }
    EXPECT_EQ(all, g.vertices());
  }
}

std::vector<std::size_t> level_sizes(const Levelling& lv) {
  std::vector<std::size_t> out;
  for (const auto& l : lv.levels()) out.push_back(l.size());
  return out;
}

TEST(BfsLevelling, SixCycle) {
  const Graph graph = cycle(6);
  EXPECT_EQ(level_sizes(bfs_levelling(graph, 0)),
            (std::vector<std::size_t>{1, 2, 2, 1}));
}

TEST(BfsLevelling, CompleteGraph) {
  const Graph graph = complete(4);
  EXPECT_EQ(level_sizes(bfs_levelling(graph, 2)),
            (std::vector<std::size_t>{1, 3}));
}

TEST(BfsLevelling, PathFromAnEnd) {
  const Graph graph = path_graph(4);
  EXPECT_EQ(level_sizes(bfs_levelling(graph, 0)),
            (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(BfsLevelling, AlwaysValid) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = testing::random_graph(15, 0.2, seed);
    for (const auto& comp : components(g)) {
      const Levelling lv = bfs_levelling(g, comp.front(), comp);
      EXPECT_FALSE(validate_levelling(lv).has_value());
      EXPECT_EQ(lv.all_vertices(), comp);
    }
  }
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique(complete(4)).size(), 4u);
  EXPECT_EQ(max_clique(cycle(5)), (VertexSet{0, 1}));
  EXPECT_EQ(max_clique(cycle(7).complement()).size(), 3u);
}

TEST(MaxClique, AgreesWithCliqueEnumeration) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = testing::random_graph(4 + seed % 9, 0.5, seed);
    const VertexSet c = max_clique(g);
    EXPECT_TRUE(is_clique(g, c));
    const int w = static_cast<int>(c.size());
    EXPECT_TRUE(cliques_of_size(g, g.vertices(), w + 1).empty());
    // lexicographically smallest among the maximum ones
    EXPECT_EQ(cliques_of_size(g, g.vertices(), w).front(), c);
  }
}

TEST(CliquesOfSize, Examples) {
  EXPECT_EQ(cliques_of_size(complete(3), {0, 1, 2}, 3),
            (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(cliques_of_size(cycle(5), {0, 1, 2, 3, 4}, 2),
            (std::vector<VertexSet>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_TRUE(cliques_of_size(cycle(5), {0, 1, 2, 3, 4}, 3).empty());
}

TEST(ShortestPathWithin, GoesRoundTheSixCycle) {
  const auto p = shortest_path_within(cycle(6), 2, 4, {0, 1, 5});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->vertices, (std::vector<Vertex>{2, 1, 0, 5, 4}));
  EXPECT_EQ(p->length(), 4u);
}

TEST(ShortestPathWithin, AdjacentEnds) {
  const auto p = shortest_path_within(cycle(6), 0, 1, {});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->vertices, (std::vector<Vertex>{0, 1}));
}

TEST(ShortestPathWithin, DisconnectedRestriction) {
  EXPECT_FALSE(shortest_path_within(cycle(6), 0, 3, {1}).has_value());
}

TEST(ShortestPathWithin, ResultIsInduced) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = testing::random_graph(12, 0.3, seed);
    const VertexSet interior{2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    if (auto p = shortest_path_within(g, 0, 1, interior)) {
      EXPECT_TRUE(is_induced_path(g, *p));
      EXPECT_EQ(p->front(), 0);
      EXPECT_EQ(p->back(), 1);
    }
  }
}

TEST(SetAlgebra, SortedOperations) {
  EXPECT_EQ(set_union({1, 3}, {2, 3}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(set_intersection({1, 3, 5}, {3, 4, 5}), (VertexSet{3, 5}));
  EXPECT_EQ(set_difference({1, 3, 5}, {3}), (VertexSet{1, 5}));
  EXPECT_EQ(make_set({4, 1, 4, 2}), (VertexSet{1, 2, 4}));
  EXPECT_TRUE(sets_disjoint({1, 2}, {3}));
}

}  // namespace
}  // namespace holecolor
