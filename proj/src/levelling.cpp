#include "holecolor/levelling.hpp"

#include <algorithm>
#include <stdexcept>

namespace holecolor {

Levelling::Levelling(const Graph& g, std::vector<VertexSet> levels)
    : g_(&g), levels_(std::move(levels)), index_(g.order(), -1) {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    levels_[i] = make_set(std::move(levels_[i]));
    for (Vertex v : levels_[i]) {
      if (!g.valid(v)) {
        throw std::invalid_argument("levelling: vertex " + std::to_string(v) +
                                    " out of range");
      }
      if (index_[v] < 0) index_[v] = static_cast<int>(i);
    }
  }
}

VertexSet Levelling::union_below(int t) const {
  VertexSet out;
  for (int i = 0; i < t && i <= top(); ++i) {
    out.insert(out.end(), levels_[i].begin(), levels_[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Levelling::parents(Vertex v) const {
  VertexSet out;
  const int i = level_of(v);
  if (i <= 0) return out;
  for (Vertex w : g_->neighbours(v)) {
    if (index_[w] == i - 1) out.push_back(w);
  }
  return out;
}

VertexSet Levelling::children(Vertex v) const {
  VertexSet out;
  const int i = level_of(v);
  if (i < 0) return out;
  for (Vertex w : g_->neighbours(v)) {
    if (index_[w] == i + 1) out.push_back(w);
  }
  return out;
}

VertexSet Levelling::dependents(Vertex v) const {
  VertexSet out;
  for (Vertex c : children(v)) {
    bool only = true;
    for (Vertex w : g_->neighbours(c)) {
      if (w != v && index_[w] == index_[v]) {
        only = false;
        break;
      }
    }
    if (only) out.push_back(c);
  }
  return out;
}

Levelling Levelling::with_level(int i, VertexSet s) const {
  auto levels = levels_;
  levels[i] = std::move(s);
  return Levelling(*g_, std::move(levels));
}

Levelling Levelling::truncated(int k) const {
  return Levelling(*g_, std::vector<VertexSet>(levels_.begin(),
                                               levels_.begin() + k + 1));
}

Levelling bfs_levelling(const Graph& g, Vertex root) {
  return bfs_levelling(g, root, g.vertices());
}

Levelling bfs_levelling(const Graph& g, Vertex root, const VertexSet& within) {
  std::vector<char> allowed(g.order(), 0);
  for (Vertex v : within) allowed[v] = 1;
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> levels{{root}};
  seen[root] = 1;
  while (true) {
    VertexSet next;
    for (Vertex v : levels.back()) {
      for (Vertex w : g.neighbours(v)) {
        if (allowed[w] && !seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return Levelling(g, std::move(levels));
}

std::string LevellingViolation::message() const {
  switch (kind) {
    case Kind::kRootNotSingleton:
      return "level 0 is not a single vertex";
    case Kind::kOverlap:
      return "vertex " + std::to_string(v) + " appears in two levels";
    case Kind::kNoParent:
      return "vertex " + std::to_string(v) + " in level " +
             std::to_string(level) + " has no parent";
    case Kind::kLongEdge:
      return "long edge " + std::to_string(v) + "-" + std::to_string(w) +
             " from level " + std::to_string(level);
  }
  return {};
}

std::optional<LevellingViolation> validate_levelling(const Levelling& lv) {
  using Kind = LevellingViolation::Kind;
  if (lv.top() < 0 || lv.level(0).size() != 1) {
    return LevellingViolation{Kind::kRootNotSingleton, 0, -1, -1};
  }
  for (int i = 0; i <= lv.top(); ++i) {
    for (Vertex v : lv.level(i)) {
      if (lv.level_of(v) != i) return LevellingViolation{Kind::kOverlap, i, v, -1};
    }
  }
  const Graph& g = lv.graph();
  for (int i = 1; i <= lv.top(); ++i) {
    for (Vertex v : lv.level(i)) {
      bool has_parent = false;
      for (Vertex w : g.neighbours(v)) {
        const int j = lv.level_of(w);
        if (j < 0) continue;
        if (j == i - 1) has_parent = true;
        if (j < i - 1) return LevellingViolation{Kind::kLongEdge, i, v, w};
      }
      if (!has_parent) return LevellingViolation{Kind::kNoParent, i, v, -1};
    }
  }
  return std::nullopt;
}

Levelling prune_for_dependents(const Levelling& lv,
                               const std::vector<int>& levels_to_enforce) {
  std::vector<int> enforce;
  for (int i : levels_to_enforce) {
    if (i >= 1 && i < lv.top()) enforce.push_back(i);
  }
  Levelling current = lv;
  while (true) {
    Vertex victim = -1;
    int victim_level = -1;
    for (int i : enforce) {
      const auto& level = current.level(i);
      for (auto it = level.rbegin(); it != level.rend(); ++it) {
        if (*it <= victim) break;
        if (current.dependents(*it).empty()) {
          victim = *it;
          victim_level = i;
          break;
        }
      }
    }
    if (victim < 0) return current;
    current = current.with_level(
        victim_level, set_difference(current.level(victim_level), {victim}));
  }
}

Levelling prune_unanchored(const Levelling& lv) {
  const int k = lv.top();
  if (k < 1) throw std::invalid_argument("prune_unanchored: needs k >= 1");
  return lv.with_level(
      k - 1, with_neighbour_in(lv.graph(), lv.level(k - 1), lv.level(k)));
}

Levelling restrict_top(const Levelling& lv, const VertexSet& comp) {
  const int k = lv.top();
  for (const auto& c : components(lv.graph(), lv.level(k))) {
    if (c == comp) return lv.with_level(k, comp);
  }
  throw std::invalid_argument("restrict_top: not a component of the top level");
}

std::optional<ParentRuleViolation> check_parent_rule(const Levelling& lv,
                                                     int upto) {
  const Graph& g = lv.graph();
  for (int i = 1; i <= std::min(upto, lv.top()); ++i) {
    const auto& level = lv.level(i);
    for (std::size_t a = 0; a < level.size(); ++a) {
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        Vertex u = level[a];
        Vertex v = level[b];
        if (!g.adjacent(u, v)) continue;
        auto pu = lv.parents(u);
        auto pv = lv.parents(v);
        if (pu == pv) continue;
        VertexSet diff;
        std::set_symmetric_difference(pu.begin(), pu.end(), pv.begin(),
                                      pv.end(), std::back_inserter(diff));
        return ParentRuleViolation{u, v, diff.front()};
      }
    }
  }
  return std::nullopt;
}

Path spine(const Levelling& lv) {
  Path p;
  p.vertices.push_back(lv.level(0).front());
  for (int i = 1; i <= lv.top(); ++i) {
    auto deps = lv.dependents(p.vertices.back());
    if (deps.empty()) {
      throw std::logic_error("spine: vertex " +
                             std::to_string(p.vertices.back()) +
                             " has no dependent");
    }
    p.vertices.push_back(deps.front());
  }
  return p;
}

bool ParityGraph::odd(Vertex u, Vertex v) const {
  auto iu = std::lower_bound(vertices.begin(), vertices.end(), u);
  auto iv = std::lower_bound(vertices.begin(), vertices.end(), v);
  return graph.adjacent(static_cast<int>(iu - vertices.begin()),
                        static_cast<int>(iv - vertices.begin()));
}

int sibling_edges(const Levelling& lv, const Path& p) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (lv.level_of(p.vertices[i]) == lv.level_of(p.vertices[i + 1])) ++count;
  }
  return count;
}

ParityGraph parity_graph(const Levelling& lv, int t) {
  const Graph& g = lv.graph();
  ParityGraph pg;
  pg.vertices = lv.level(t);
  if (!is_stable(g, pg.vertices)) {
    throw std::invalid_argument("parity_graph: level is not stable");
  }
  const VertexSet below = lv.union_below(t);
  EdgeList edges;
  for (std::size_t i = 0; i < pg.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < pg.vertices.size(); ++j) {
      Vertex u = pg.vertices[i];
      Vertex v = pg.vertices[j];
      auto path = shortest_path_within(g, u, v, below);
      if (!path) {
        throw std::logic_error("parity_graph: no path below level between " +
                               std::to_string(u) + " and " + std::to_string(v));
      }
      if (sibling_edges(lv, *path) % 2 != path->parity()) {
        throw std::logic_error("parity_graph: sibling-edge parity mismatch");
      }
      if (path->parity() == 1) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
      pg.witness.emplace(std::make_pair(u, v), std::move(*path));
    }
  }
  pg.graph = Graph(static_cast<int>(pg.vertices.size()), edges);
  return pg;
}

}  // namespace holecolor
