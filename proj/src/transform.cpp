#include "holecolor/transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "holecolor/errors.hpp"

namespace holecolor {

std::vector<GammaType> all_types(int ell) {
  std::vector<GammaType> out;
  for (int alpha = 1; alpha <= 3; ++alpha) {
    for (int lambda = 0; lambda <= ell; ++lambda) out.push_back({alpha, lambda});
  }
  return out;
}

VertexSet spine_neighbourhood(const Levelling& lv, const Path& s) {
  const Graph& g = lv.graph();
  const VertexSet on_spine = make_set(s.vertices);
  VertexSet out;
  for (Vertex v : lv.all_vertices()) {
    if (set_contains(on_spine, v)) continue;
    for (Vertex x : s.vertices) {
      if (g.adjacent(v, x)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::map<Vertex, GammaType> classify_types(const Levelling& lv, const Path& s,
                                           int ell) {
  const Graph& g = lv.graph();
  std::map<Vertex, GammaType> types;
  for (Vertex v : spine_neighbourhood(lv, s)) {
    const int i = lv.level_of(v);
    bool low = false;
    bool same = false;
    for (int j = 0; j < static_cast<int>(s.vertices.size()); ++j) {
      if (!g.adjacent(v, s.vertices[j])) continue;
      if (j == i - 1) {
        low = true;
      } else if (j == i) {
        same = true;
      } else {
        throw std::logic_error("classify_types: vertex " + std::to_string(v) +
                               " in level " + std::to_string(i) +
                               " is adjacent to spine vertex s_" +
                               std::to_string(j));
      }
    }
    const int alpha = low && same ? 2 : (low ? 1 : 3);
    types.emplace(v, GammaType{alpha, i % (ell + 1)});
  }
  return types;
}

VertexSet gamma_closure(const Levelling& lv, const Path& s,
                        const std::map<Vertex, GammaType>& types,
                        GammaType gamma) {
  const VertexSet on_spine = make_set(s.vertices);
  std::vector<char> in(lv.graph().order(), 0);
  for (const auto& [v, t] : types) {
    if (t == gamma) in[v] = 1;
  }
  // Parents sit one level down, so one ascending sweep reaches the fixpoint.
  for (int i = 1; i <= lv.top(); ++i) {
    for (Vertex v : lv.level(i)) {
      if (in[v] || set_contains(on_spine, v) || types.count(v)) continue;
      for (Vertex p : lv.parents(v)) {
        if (in[p]) {
          in[v] = 1;
          break;
        }
      }
    }
  }
  VertexSet out;
  for (Vertex v : lv.all_vertices()) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

CoverChain minimal_cover_chain(const Levelling& lv, const Path& s,
                               const VertexSet& v_gamma,
                               const VertexSet& top_comp) {
  const Graph& g = lv.graph();
  const int k = lv.top();
  const VertexSet ns = spine_neighbourhood(lv, s);
  CoverChain chain;
  chain.j.assign(k + 1, {});
  chain.j[k] = top_comp;

  auto covered = [&](const VertexSet& need, const VertexSet& parents) {
    for (Vertex x : need) {
      bool hit = false;
      for (Vertex p : parents) {
        if (g.adjacent(x, p)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };

  for (int i = k - 1; i >= 1; --i) {
    const VertexSet need = set_difference(chain.j[i + 1], ns);
    const VertexSet pool = set_intersection(v_gamma, lv.level(i));
    VertexSet chosen = with_neighbour_in(g, pool, need);
    if (!covered(need, chosen)) {
      throw std::logic_error("minimal_cover_chain: level " +
                             std::to_string(i + 1) +
                             " vertex without a parent in V(gamma)");
    }
    const VertexSet order = chosen;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      VertexSet without = set_difference(chosen, {*it});
      if (covered(need, without)) chosen = std::move(without);
    }
    for (Vertex u : chosen) {
      Vertex witness = -1;
      for (Vertex c : need) {
        if (!g.adjacent(u, c)) continue;
        bool unique = true;
        for (Vertex p : chosen) {
          if (p != u && g.adjacent(p, c)) {
            unique = false;
            break;
          }
        }
        if (unique) {
          witness = c;
          break;
        }
      }
      if (witness < 0) {
        throw std::logic_error("minimal_cover_chain: vertex " +
                               std::to_string(u) + " has no private child");
      }
      chain.private_child.emplace(u, witness);
    }
    chain.j[i] = std::move(chosen);
  }
  return chain;
}

Levelling assemble_m(const Levelling& lv, GammaType gamma, const Path& s,
                     const CoverChain& chain, int ell) {
  const int k = lv.top();
  const auto& sp = s.vertices;
  std::vector<VertexSet> levels(k + 1);
  if (gamma.alpha == 1 || gamma.alpha == 2) {
    for (int i = 0; i <= k; ++i) levels[i] = set_union({sp[i]}, chain.j[i]);
  } else {
    levels[0] = {sp[1]};
    for (int i = 1; i < k; ++i) levels[i] = set_union({sp[i + 1]}, chain.j[i]);
    levels[k] = chain.j[k];
  }
  Levelling m(lv.graph(), std::move(levels));
  if (auto bad = validate_levelling(m)) {
    VertexSet witness;
    if (bad->v >= 0) witness.push_back(bad->v);
    if (bad->w >= 0) witness.push_back(bad->w);
    throw StructureViolation("transform-levelling", bad->message(),
                             make_set(std::move(witness)));
  }
  const int upto = k - std::max(2, ell);
  if (auto bad = check_parent_rule(m, upto)) {
    throw StructureViolation(
        "transform-parent-rule",
        "siblings " + std::to_string(bad->u) + "," + std::to_string(bad->v) +
            " disagree on parent " + std::to_string(bad->parent),
        make_set({bad->u, bad->v, bad->parent}));
  }
  return m;
}

TransformResult parent_transform(const Levelling& lv, int ell) {
  const Graph& g = lv.graph();
  const int k = lv.top();
  if (k < 1) throw std::invalid_argument("parent_transform: needs k >= 1");
  if (components(g, lv.level(k)).size() != 1) {
    throw std::invalid_argument("parent_transform: top level not connected");
  }
  for (int i = 0; i < k; ++i) {
    for (Vertex v : lv.level(i)) {
      if (lv.dependents(v).empty()) {
        throw std::invalid_argument("parent_transform: vertex " +
                                    std::to_string(v) + " has no dependent");
      }
    }
  }

  TransformResult result;
  result.spine = spine(lv);
  result.spine_top = result.spine.vertices.back();
  const auto types = classify_types(lv, result.spine, ell);

  for (GammaType gamma : all_types(ell)) {
    const VertexSet closure = gamma_closure(lv, result.spine, types, gamma);
    const VertexSet top = set_intersection(closure, lv.level(k));
    for (const auto& comp : components(g, top)) {
      auto chain = minimal_cover_chain(lv, result.spine, closure, comp);
      Levelling m = assemble_m(lv, gamma, result.spine, chain, ell);
      result.pieces.push_back(TransformPiece{gamma, comp, std::move(m),
                                             std::move(chain.j),
                                             std::move(chain.private_child)});
      for (Vertex v : comp) {
        result.designated.emplace(v, result.pieces.size() - 1);
      }
    }
  }
  for (Vertex v : lv.level(k)) {
    if (v != result.spine_top && !result.designated.count(v)) {
      throw StructureViolation("transform-coverage",
                               "vertex " + std::to_string(v) +
                                   " of the top level lies in no V(gamma)",
                               {v});
    }
  }
  return result;
}

}  // namespace holecolor
