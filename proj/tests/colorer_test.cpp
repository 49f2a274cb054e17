#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "holecolor/colorer.hpp"
#include "holecolor/errors.hpp"
#include "holecolor/testkit.hpp"

namespace holecolor {
namespace {

LevelContext context(ColorEngine& engine, int omega, int* calls = nullptr) {
  LevelContext ctx;
  ctx.omega = omega;
  ctx.sub = [&engine, calls](const VertexSet& x) {
    if (calls) ++*calls;
    return engine.color_set(x);
  };
  return ctx;
}

// Siblings 1-2 under the root make the anchors 3, 4 odd-joined; the top
// triangle 5-6-7 hangs off 3 (5, 7) and 4 (6).
Graph odd_join_gadget() {
  return Graph(8, EdgeList{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {3, 7},
                           {4, 6}, {5, 6}, {5, 7}, {6, 7}});
}

TEST(Guarantee, RecurrenceValues) {
  EXPECT_EQ(guarantee(1), 1);
  EXPECT_EQ(guarantee(2), 98);
  EXPECT_EQ(guarantee(3), 1382978);
  EXPECT_EQ(guarantee_saturated(3), 1382978u);
  EXPECT_EQ(guarantee_saturated(4), std::uint64_t{48} * 4 * 1382978 * 1382978 + 2);
  EXPECT_EQ(guarantee_saturated(9), UINT64_MAX);
  EXPECT_THROW(guarantee(0), std::invalid_argument);
}

TEST(Guarantee, StaysBelowTheClosedForm) {
  using boost::multiprecision::cpp_int;
  for (int w = 1; w <= 12; ++w) {
    const cpp_int closed = (cpp_int(1) << (1u << (w + 2))) / (48 * (w + 2));
    EXPECT_LE(guarantee(w), closed) << w;
  }
}

TEST(ColorLevelComb, StableTopWithoutCliquesIsOneSubCall) {
  // K_{2,3} from 0: L1 = {2,3,4}, L2 = {1}
  const Graph g = testing::complete_bipartite(2, 3);
  ColorEngine engine(g);
  int calls = 0;
  const Coloring c = color_level_comb(bfs_levelling(g, 0), context(engine, 2, &calls));
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(c.colour.size(), 1u);
  EXPECT_EQ(c.width, 1);
}

TEST(ColorLevelComb, JoinSplitColoursBothSides) {
  const Graph g = odd_join_gadget();
  ASSERT_FALSE(find_odd_hole_brute(g).has_value());
  ColorEngine engine(g);
  EngineStats stats;
  LevelContext ctx = context(engine, 3);
  ctx.stats = &stats;
  const Levelling lv = bfs_levelling(g, 0);
  ASSERT_EQ(lv.level(3), (VertexSet{5, 6, 7}));
  const Coloring c = color_level_comb(lv, ctx);
  // X = {5,7} needs two colours, Y = {6} one more
  EXPECT_EQ(c.width, 3);
  EXPECT_TRUE(c.proper(g));
  EXPECT_EQ(c.colour.at(6), 2);
  EXPECT_EQ(stats.split_calls, 1);
  EXPECT_EQ(stats.p4_in_parity_graph, 0);
}

TEST(ColorLevelComb, FiveCycleTopIsAViolation) {
  const Graph g = testing::cycle(5);
  ColorEngine engine(g);
  EXPECT_THROW(color_level_comb(bfs_levelling(g, 0), context(engine, 2)),
               StructureViolation);
}

TEST(ColorLevelComb, NeedsAStableLevelBelow) {
  const Graph g = odd_join_gadget();
  ColorEngine engine(g);
  EXPECT_THROW(color_level_comb(bfs_levelling(g, 0).truncated(2), context(engine, 3)),
               std::invalid_argument);
}

TEST(ColorLevelUlt, StarFromALeaf) {
  // root 1, L1 = {0}, L2 = the other leaves
  const Graph g = testing::star(4);
  ColorEngine engine(g);
  const Coloring c = color_level_ult(bfs_levelling(g, 1), context(engine, 2));
  EXPECT_EQ(c.colour.size(), 3u);
  EXPECT_EQ(c.width, 1);
}

TEST(ColorLevelUlt, TreesUseOneClassPerBlock) {
  // binary tree of depth 3
  EdgeList e;
  for (int v = 1; v < 15; ++v) e.emplace_back((v - 1) / 2, v);
  const Graph g(15, e);
  ColorEngine engine(g);
  const Levelling lv = bfs_levelling(g, 0);
  for (int k = 2; k <= 3; ++k) {
    const Coloring c = color_level_ult(lv.truncated(k), context(engine, 2));
    EXPECT_EQ(c.used(), 1) << k;
    EXPECT_EQ(c.colour.size(), lv.level(k).size());
  }
}

TEST(ColorLevelUlt, FiveCycleIsAViolation) {
  const Graph g = testing::cycle(5);
  ColorEngine engine(g);
  EXPECT_THROW(color_level_ult(bfs_levelling(g, 0), context(engine, 2)),
               StructureViolation);
}

TEST(ColorLevelTransformed, SpineTopTakesTheReservedColour) {
  // path 0-1-2-3 plus 4 seeing both 2 and 3
  const Graph g(5, EdgeList{{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  ColorEngine engine(g);
  EngineStats stats;
  LevelContext ctx = context(engine, 3);
  ctx.stats = &stats;
  const Levelling lv = bfs_levelling(g, 0);
  ASSERT_EQ(lv.level(3), (VertexSet{3, 4}));
  const Coloring c = color_level_transformed(lv, ctx);
  EXPECT_EQ(c.colour.at(3), 0);
  EXPECT_GE(c.colour.at(4), 1);
  EXPECT_EQ(stats.transform_calls, 1);
  EXPECT_TRUE(c.proper(g));
}

TEST(ColorLevelTransformed, NeedsThreeLevels) {
  const Graph g = testing::path_graph(3);
  ColorEngine engine(g);
  EXPECT_THROW(color_level_transformed(bfs_levelling(g, 0), context(engine, 2)),
               std::invalid_argument);
}

TEST(ColorGraph, SingleVertex) {
  const auto cert = color_graph(Graph(1, EdgeList{}));
  const auto& c = std::get<ColoringCertificate>(cert);
  EXPECT_EQ(c.classes, (std::vector<VertexSet>{{0}}));
  EXPECT_EQ(c.clique, (VertexSet{0}));
  EXPECT_EQ(bound_to_json(c.bound_exponent), 256);
}

TEST(ColorGraph, EmptyGraph) {
  const auto cert = color_graph(Graph(0, EdgeList{}));
  EXPECT_TRUE(std::get<ColoringCertificate>(cert).classes.empty());
  EXPECT_TRUE(verify_certificate(Graph(0, EdgeList{}), cert).ok());
}

TEST(ColorGraph, CompleteBipartite) {
  const Graph g = testing::complete_bipartite(3, 3);
  const auto cert = color_graph(g);
  const auto& c = std::get<ColoringCertificate>(cert);
  EXPECT_TRUE(verify_certificate(g, cert).ok());
  EXPECT_EQ(c.clique.size(), 2u);
  EXPECT_LE(c.classes.size(), 98u);
  EXPECT_EQ(bound_to_json(c.bound_exponent), 65536);
}

TEST(ColorGraph, FiveCycleYieldsItsHole) {
  const auto out = color_graph_detailed(testing::cycle(5));
  ASSERT_TRUE(std::holds_alternative<OddHoleCertificate>(out.certificate));
  EXPECT_EQ(std::get<OddHoleCertificate>(out.certificate).cycle,
            (std::vector<Vertex>{0, 1, 2, 3, 4}));
  ASSERT_TRUE(out.violation.has_value());
  EXPECT_NE(out.violation->find("split-union-clique"), std::string::npos);
}

TEST(ColorGraph, WithoutTheDetectorAViolationIsAnInternalError) {
  ColorOptions opts;
  opts.fallback_detector = false;
  EXPECT_THROW(color_graph(testing::cycle(5), opts), InternalError);
}

TEST(ColorGraph, DetectorRefusalIsAnInternalError) {
  ColorOptions opts;
  opts.max_detect_n = 4;
  EXPECT_THROW(color_graph(testing::cycle(5), opts), InternalError);
}

TEST(ColorGraph, Petersen) {
  const Graph g = testing::petersen();
  const auto cert = color_graph(g);
  EXPECT_TRUE(verify_certificate(g, cert).ok());
}

TEST(ColorGraph, OddHoleFreeGraphsGetWithinTheGuarantee) {
  for (const Graph& g : testing::odd_hole_free_sample(150, 14, 11)) {
    const auto out = color_graph_detailed(g);
    ASSERT_FALSE(out.violation.has_value()) << *out.violation;
    const auto& c = std::get<ColoringCertificate>(out.certificate);
    EXPECT_LE(c.classes.size(), guarantee_saturated(static_cast<int>(c.clique.size())));
    EXPECT_TRUE(verify_certificate(g, out.certificate).ok());
    EXPECT_EQ(out.stats.p4_in_parity_graph, 0);
    EXPECT_EQ(out.stats.p4_in_level_cograph, 0);
  }
}

TEST(ColorGraph, BipartiteNeedsAtMostTheSecondGuarantee) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorSpec s;
    s.family = GeneratorSpec::Family::kBipartite;
    s.n = 3 + seed % 15;
    s.m = 2 + seed % 11;
    s.p = 0.3;
    s.seed = seed;
    const Graph g = gen_family(s);
    if (g.size() == 0) continue;
    const auto& c = std::get<ColoringCertificate>(color_graph(g));
    EXPECT_EQ(c.clique.size(), 2u);
    EXPECT_LE(c.classes.size(), 98u);
    EXPECT_EQ(exact_chromatic(g), 2);
  }
}

TEST(ColorEngine, SubsetsAreColouredProperlyAndCached) {
  const Graph g = gen_substitution(1);
  ColorEngine engine(g);
  const Coloring all = engine.color_all();
  EXPECT_TRUE(all.proper(g));
  EXPECT_LE(static_cast<std::uint64_t>(all.width), guarantee_saturated(3));
  const Coloring part = engine.color_set({0, 2, 4});
  EXPECT_EQ(part.used(), 3);
  engine.color_set({0, 2, 4});
  EXPECT_GE(engine.stats().cache_hits, 1);
}

TEST(ColorGraph, Deterministic) {
  const Graph g = gen_substitution(2);
  EXPECT_EQ(to_json(color_graph(g)).dump(), to_json(color_graph(g)).dump());
}

}  // namespace
}  // namespace holecolor
