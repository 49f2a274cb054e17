#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "holecolor/certificate.hpp"
#include "holecolor/graph.hpp"
#include "holecolor/levelling.hpp"

namespace holecolor {

/// Partial colouring: vertex -> colour id in [0, width).
struct Coloring {
  std::map<Vertex, int> colour;
  int width = 0;

  /// Number of distinct colours actually used.
  int used() const;
  /// Non-empty classes in colour-id order, each ascending.
  std::vector<VertexSet> classes() const;
  bool proper(const Graph& g) const;
};

struct SplitResult {
  VertexSet x;
  VertexSet y;
};

/// Partitions `b` into X, Y so that every w-clique inside `b` meets both.
///
/// `a` must be stable with every vertex of `b` having a neighbour in `a`;
/// vertex i of `h` stands for a[i], and h is expected to be a cograph whose
/// edges are the pairs of `a` joined by odd a-paths. Throws
/// StructureViolation when that expectation observably fails.
SplitResult split_cliques(const Graph& g, const VertexSet& a, const Graph& h,
                          const VertexSet& b, int w);

/// g(1) = 1, g(w) = 48 w g(w-1)^2 + 2.
boost::multiprecision::cpp_int guarantee(int w);
/// guarantee(w) clamped to UINT64_MAX.
std::uint64_t guarantee_saturated(int w);

struct EngineStats {
  long long sub_calls = 0;
  long long cache_hits = 0;
  long long comb_calls = 0;
  long long ult_calls = 0;
  long long transform_calls = 0;
  long long split_calls = 0;
  long long parity_graphs = 0;
  long long p4_in_parity_graph = 0;
  long long p4_in_level_cograph = 0;
};

using SubColorer = std::function<Coloring(const VertexSet&)>;

struct LevelContext {
  int omega = 0;       // clique number of the graph being coloured
  SubColorer sub;      // colours G[X] for any X with clique number < omega
  EngineStats* stats = nullptr;
};

/// Colours L_k of a levelling whose L_{k-1} is stable and whose levels
/// 1..k-2 obey the parent rule, with at most 2 n colours where n bounds the
/// sub-colourer.
Coloring color_level_comb(const Levelling& lv, const LevelContext& ctx);

/// Colours L_k of a levelling whose levels 1..k-2 obey the parent rule, with
/// at most 4 n^2 omega colours. Requires k >= 2.
Coloring color_level_ult(const Levelling& lv, const LevelContext& ctx);

/// Colours L_k (k >= 3) of a BFS levelling through the parent-rule
/// transformation at ell = 1: colour 0 is reserved for the spine tops and
/// each of the six types gets its own palette block. At most
/// 24 n^2 omega + 1 colours.
Coloring color_level_transformed(const Levelling& lv, const LevelContext& ctx);

/// Recursive colourer over induced subgraphs of one graph, memoised on the
/// vertex set.
class ColorEngine {
 public:
  explicit ColorEngine(const Graph& g) : g_(g) {}

  /// Colours G[s] with at most guarantee(omega(G[s])) colours, or throws
  /// StructureViolation.
  Coloring color_set(const VertexSet& s);
  Coloring color_all() { return color_set(g_.vertices()); }

  const EngineStats& stats() const { return stats_; }

 private:
  struct Entry {
    Coloring coloring;
    int omega;
  };
  const Entry& solve(const VertexSet& s);

  const Graph& g_;
  std::map<VertexSet, Entry> cache_;
  EngineStats stats_;
};

struct ColorOptions {
  bool fallback_detector = true;
  int max_detect_n = 64;
};

struct ColorOutcome {
  Certificate certificate;
  EngineStats stats;
  /// Set when the structured colouring failed and the detector ran.
  std::optional<std::string> violation;
};

/// Either an odd hole, or a maximum clique with a proper colouring using at
/// most 2^(2^(|C|+2)) colours. The certificate is verified before it is
/// returned; throws InternalError rather than return a bad one.
ColorOutcome color_graph_detailed(const Graph& g, const ColorOptions& opts = {});
Certificate color_graph(const Graph& g, const ColorOptions& opts = {});

}  // namespace holecolor
