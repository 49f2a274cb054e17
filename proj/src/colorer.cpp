#include "holecolor/colorer.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <variant>

#include "holecolor/cograph.hpp"
#include "holecolor/errors.hpp"
#include "holecolor/testkit.hpp"
#include "holecolor/transform.hpp"

namespace holecolor {

using boost::multiprecision::cpp_int;

int Coloring::used() const {
  std::set<int> seen;
  for (const auto& [v, c] : colour) seen.insert(c);
  return static_cast<int>(seen.size());
}

std::vector<VertexSet> Coloring::classes() const {
  std::map<int, VertexSet> by_colour;
  for (const auto& [v, c] : colour) by_colour[c].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [c, vs] : by_colour) out.push_back(std::move(vs));
  return out;
}

bool Coloring::proper(const Graph& g) const {
  for (const auto& [v, c] : colour) {
    if (c < 0 || c >= width) return false;
    for (Vertex w : g.neighbours(v)) {
      if (w <= v) continue;
      auto it = colour.find(w);
      if (it != colour.end() && it->second == c) return false;
    }
  }
  return true;
}

cpp_int guarantee(int w) {
  if (w < 1) throw std::invalid_argument("guarantee: w must be >= 1");
  cpp_int g = 1;
  for (int i = 2; i <= w; ++i) g = 48 * cpp_int(i) * g * g + 2;
  // The closed form is only worth checking while 2^(2^(w+2)) stays small.
  if (w <= 12) {
    const cpp_int limit = (cpp_int(1) << (1u << (w + 2))) / (48 * (w + 2));
    if (g > limit) throw std::logic_error("guarantee exceeds the closed form");
  }
  return g;
}

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kMax - b ? kMax : a + b;
}

std::uint64_t ult_bound(std::uint64_t n, int omega) {
  return sat_mul(sat_mul(4, sat_mul(n, n)), static_cast<std::uint64_t>(omega));
}

void check_ledger(const char* site, int width, std::uint64_t bound) {
  if (static_cast<std::uint64_t>(width) > bound) {
    throw StructureViolation(site, "used " + std::to_string(width) +
                                       " colours, bound " +
                                       std::to_string(bound));
  }
}

// Copies src into dst shifted by `offset` and widens dst accordingly.
void place(Coloring& dst, const Coloring& src, int offset) {
  for (const auto& [v, c] : src.colour) dst.colour[v] = c + offset;
  dst.width = std::max(dst.width, offset + src.width);
}

void bump(EngineStats* stats, long long EngineStats::*field) {
  if (stats) ++(stats->*field);
}

Coloring colour_side(const Graph& g, const VertexSet& side,
                     const LevelContext& ctx) {
  if (side.empty()) return {};
  if (has_clique_of_size(g, side, ctx.omega)) {
    throw StructureViolation("comb-side-clique",
                             "a side of the clique split still holds an " +
                                 std::to_string(ctx.omega) + "-clique",
                             max_clique(g, side));
  }
  return ctx.sub(side);
}

Levelling with_top_two(const Levelling& lv, int keep, VertexSet below,
                       VertexSet top) {
  std::vector<VertexSet> levels;
  for (int i = 0; i < keep; ++i) levels.push_back(lv.level(i));
  levels.push_back(std::move(below));
  levels.push_back(std::move(top));
  return Levelling(lv.graph(), std::move(levels));
}

Coloring merge_universes(const Coloring& even, const Coloring& odd) {
  Coloring out = even;
  place(out, odd, even.width);
  return out;
}

// Renumbers colours by first use in ascending vertex order; the width drops
// to the number of colours actually used.
Coloring compact(const Coloring& c) {
  std::map<int, int> renumber;
  Coloring out;
  for (const auto& [v, colour] : c.colour) {
    const auto it = renumber.emplace(colour, static_cast<int>(renumber.size())).first;
    out.colour[v] = it->second;
  }
  out.width = static_cast<int>(renumber.size());
  return out;
}

}  // namespace

std::uint64_t guarantee_saturated(int w) {
  if (w < 1) throw std::invalid_argument("guarantee: w must be >= 1");
  std::uint64_t g = 1;
  for (int i = 2; i <= w; ++i) {
    g = sat_add(sat_mul(sat_mul(48, static_cast<std::uint64_t>(i)),
                        sat_mul(g, g)),
                2);
  }
  return g;
}

Coloring color_level_comb(const Levelling& lv, const LevelContext& ctx) {
  const Graph& g = lv.graph();
  const int k = lv.top();
  if (k < 1) throw std::invalid_argument("color_level_comb: needs k >= 1");
  if (!is_stable(g, lv.level(k - 1))) {
    throw std::invalid_argument("color_level_comb: L_{k-1} is not stable");
  }
  bump(ctx.stats, &EngineStats::comb_calls);

  Coloring out;
  for (const auto& comp : components(g, lv.level(k))) {
    const Levelling lc = prune_unanchored(restrict_top(lv, comp));
    const VertexSet& a = lc.level(k - 1);
    Graph h(static_cast<int>(a.size()), EdgeList{});
    if (k - 1 >= 1) {
      h = parity_graph(lc, k - 1).graph;
      bump(ctx.stats, &EngineStats::parity_graphs);
      const auto tree = build_cotree(h);
      if (const auto* p4 = std::get_if<P4Witness>(&tree)) {
        bump(ctx.stats, &EngineStats::p4_in_parity_graph);
        VertexSet witness;
        for (Vertex i : p4->path) witness.push_back(a[i]);
        throw StructureViolation("comb-cograph",
                                 "parity graph contains an induced P4",
                                 make_set(witness));
      }
    }
    bump(ctx.stats, &EngineStats::split_calls);
    const SplitResult parts = split_cliques(g, a, h, comp, ctx.omega);
    const Coloring cx = colour_side(g, parts.x, ctx);
    const Coloring cy = colour_side(g, parts.y, ctx);
    place(out, cx, 0);
    place(out, cy, cx.width);
  }
  if (ctx.omega >= 2) {
    check_ledger("comb-bound", out.width,
                 sat_mul(2, guarantee_saturated(ctx.omega - 1)));
  }
  return out;
}

Coloring color_level_ult(const Levelling& lv, const LevelContext& ctx) {
  const Graph& g = lv.graph();
  const int k = lv.top();
  if (k < 2) throw std::invalid_argument("color_level_ult: needs k >= 2");
  bump(ctx.stats, &EngineStats::ult_calls);

  Coloring out;
  for (const auto& comp : components(g, lv.level(k))) {
    const Levelling lc =
        prune_for_dependents(restrict_top(lv, comp), {k - 1, k - 2});
    const VertexSet& low = lc.level(k - 2);
    auto tree = build_cotree(g, low);
    if (auto* p4 = std::get_if<P4Witness>(&tree)) {
      bump(ctx.stats, &EngineStats::p4_in_level_cograph);
      throw StructureViolation(
          "ult-cograph", "level " + std::to_string(k - 2) + " induces a P4",
          make_set({p4->path.begin(), p4->path.end()}));
    }

    // Blocks in lexicographic (j, h) order.
    std::vector<Coloring> blocks;
    for (const auto& xj : cograph_color(std::get<Cotree>(tree))) {
      const VertexSet yj = with_neighbour_in(g, lc.level(k - 1), xj);
      if (yj.empty()) continue;
      const Coloring cy = color_level_comb(with_top_two(lc, k - 2, xj, yj), ctx);
      for (const auto& cls : cy.classes()) {
        const VertexSet z = with_neighbour_in(g, comp, cls);
        if (z.empty()) continue;
        blocks.push_back(
            color_level_comb(with_top_two(lc, k - 1, cls, z), ctx));
      }
    }

    Coloring piece;
    int offset = 0;
    for (const auto& b : blocks) {
      for (const auto& [v, c] : b.colour) {
        piece.colour.emplace(v, offset + c);  // first block wins
      }
      offset += b.width;
    }
    piece.width = offset;
    if (piece.colour.size() != comp.size()) {
      throw std::logic_error("color_level_ult: a top vertex got no block");
    }
    place(out, piece, 0);
  }
  if (ctx.omega >= 2) {
    check_ledger("ult-bound", out.width,
                 ult_bound(guarantee_saturated(ctx.omega - 1), ctx.omega));
  }
  return out;
}

Coloring color_level_transformed(const Levelling& lv, const LevelContext& ctx) {
  const Graph& g = lv.graph();
  const int k = lv.top();
  if (k < 3) throw std::invalid_argument("color_level_transformed: needs k >= 3");
  constexpr int kEll = 1;

  std::map<GammaType, int> block_width;
  std::map<Vertex, std::pair<GammaType, int>> local;
  VertexSet tops;
  for (const auto& comp : components(g, lv.level(k))) {
    std::vector<int> enforce;
    for (int i = 1; i < k; ++i) enforce.push_back(i);
    const Levelling lc = prune_for_dependents(restrict_top(lv, comp), enforce);
    bump(ctx.stats, &EngineStats::transform_calls);
    const TransformResult tr = parent_transform(lc, kEll);
    tops.push_back(tr.spine_top);
    std::vector<Coloring> piece_colour;
    for (const auto& piece : tr.pieces) {
      piece_colour.push_back(color_level_ult(piece.m_levelling, ctx));
      int& w = block_width[piece.gamma];
      w = std::max(w, piece_colour.back().width);
    }
    for (const auto& [v, idx] : tr.designated) {
      local.emplace(v, std::make_pair(tr.pieces[idx].gamma,
                                      piece_colour[idx].colour.at(v)));
    }
  }

  std::map<GammaType, int> offset;
  int next = 1;  // colour 0 is the spine tops'
  for (const auto& [gamma, w] : block_width) {
    offset[gamma] = next;
    next += w;
  }
  Coloring out;
  out.width = next;
  for (Vertex t : tops) out.colour[t] = 0;
  for (const auto& [v, gc] : local) {
    out.colour[v] = offset.at(gc.first) + gc.second;
  }
  if (ctx.omega >= 2) {
    const auto n = guarantee_saturated(ctx.omega - 1);
    check_ledger("level-bound", out.width,
                 sat_add(sat_mul(6, ult_bound(n, ctx.omega)), 1));
  }
  return out;
}

Coloring ColorEngine::color_set(const VertexSet& s) {
  return solve(make_set(s)).coloring;
}

const ColorEngine::Entry& ColorEngine::solve(const VertexSet& s) {
  if (auto it = cache_.find(s); it != cache_.end()) {
    ++stats_.cache_hits;
    return it->second;
  }
  ++stats_.sub_calls;
  Entry e{{}, clique_number(g_, s)};
  const int omega = e.omega;
  if (omega == 1) {
    for (Vertex v : s) e.coloring.colour[v] = 0;
    e.coloring.width = 1;
  } else if (omega >= 2) {
    LevelContext ctx;
    ctx.omega = omega;
    ctx.stats = &stats_;
    ctx.sub = [this, omega](const VertexSet& x) -> Coloring {
      const Entry& sub = solve(x);
      if (sub.omega >= omega) {
        throw StructureViolation("sub-clique",
                                 "recursive call did not lower the clique "
                                 "number",
                                 x);
      }
      return sub.coloring;
    };

    // Levels two apart are non-adjacent, so even levels share one palette
    // universe and odd levels another. Colour 0 of each is reserved.
    Coloring even;
    Coloring odd;
    even.width = odd.width = 1;
    for (const auto& comp : components(g_, s)) {
      const Levelling lv = bfs_levelling(g_, comp.front(), comp);
      even.colour[comp.front()] = 0;
      for (int t = 1; t <= lv.top(); ++t) {
        Coloring& dst = t % 2 ? odd : even;
        if (t == 1) {
          place(dst, ctx.sub(lv.level(1)), 1);
        } else if (t == 2) {
          place(dst, color_level_ult(lv.truncated(2), ctx), 1);
        } else {
          place(dst, color_level_transformed(lv.truncated(t), ctx), 0);
        }
      }
    }
    e.coloring = compact(merge_universes(even, odd));
    check_ledger("engine-bound", e.coloring.width, guarantee_saturated(omega));
  }
  return cache_.emplace(s, std::move(e)).first->second;
}

namespace {

ColoringCertificate flatten(const Coloring& c, const Graph& g, VertexSet clique) {
  std::map<int, int> renumber;
  std::vector<VertexSet> classes;
  for (Vertex v : g.vertices()) {
    const int colour = c.colour.at(v);
    auto [it, fresh] = renumber.emplace(colour, static_cast<int>(classes.size()));
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return make_coloring_certificate(std::move(classes), std::move(clique));
}

}  // namespace

ColorOutcome color_graph_detailed(const Graph& g, const ColorOptions& opts) {
  ColorOutcome out;
  ColorEngine engine(g);
  std::string violation;
  try {
    const Coloring c = engine.color_all();
    Certificate cert = flatten(c, g, max_clique(g));
    const auto report = verify_certificate(g, cert);
    out.stats = engine.stats();
    if (report.ok()) {
      out.certificate = std::move(cert);
      return out;
    }
    violation = "final verification: " + report.failures.front();
  } catch (const StructureViolation& e) {
    violation = e.what();
  }
  out.stats = engine.stats();
  out.violation = violation;

  if (!opts.fallback_detector) {
    throw InternalError("structure violation with the detector disabled: " +
                        violation);
  }
  std::optional<Path> hole;
  try {
    hole = find_odd_hole_brute(g, opts.max_detect_n);
  } catch (const SizeRefusal& r) {
    throw InternalError(std::string("structure violation (") + violation +
                        ") and the detector refused: " + r.what());
  }
  if (!hole) {
    throw InternalError("structure violation on a graph without odd holes: " +
                        violation);
  }
  out.certificate = OddHoleCertificate{hole->vertices};
  const auto report = verify_certificate(g, out.certificate);
  if (!report.ok()) {
    throw InternalError("detector returned a bad hole: " +
                        report.failures.front());
  }
  return out;
}

Certificate color_graph(const Graph& g, const ColorOptions& opts) {
  return color_graph_detailed(g, opts).certificate;
}

}  // namespace holecolor
