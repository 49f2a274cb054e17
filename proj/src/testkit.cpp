#include "holecolor/testkit.hpp"

#include <algorithm>
#include <stdexcept>

#include "holecolor/errors.hpp"

namespace holecolor {

namespace {

void refuse_above(const char* who, const Graph& g, int max_n) {
  if (g.order() > max_n) {
    throw SizeRefusal(std::string(who) + ": " + std::to_string(g.order()) +
                          " vertices exceeds the limit of " +
                          std::to_string(max_n),
                      g.order(), max_n);
  }
}

bool bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Depth-first search over induced paths p0 < everything else, ascending
// neighbour order, so the first hole closed is the least one.
class HoleSearch {
 public:
  explicit HoleSearch(const Graph& g) : g_(g), on_(g.order(), 0) {}

  std::optional<Path> run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      on_[s] = 1;
      const bool found = extend();
      on_[s] = 0;
      if (found) return Path{path_};
    }
    return std::nullopt;
  }

 private:
  bool extend() {
    const Vertex s = path_.front();
    const Vertex last = path_.back();
    for (Vertex v : g_.neighbours(last)) {
      if (v <= s || on_[v]) continue;
      // v may touch only `last` and, when closing, s.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (g_.adjacent(v, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path_.size() >= 2 && g_.adjacent(v, s)) {
        const std::size_t len = path_.size() + 1;
        if (len >= 5 && len % 2 == 1 && path_[1] < v) {
          path_.push_back(v);
          return true;
        }
        continue;
      }
      if (path_.size() == 1 || !g_.adjacent(v, s)) {
        path_.push_back(v);
        on_[v] = 1;
        const bool found = extend();
        on_[v] = 0;
        if (found) return true;
        path_.pop_back();
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> on_;
  std::vector<Vertex> path_;
};

bool is_induced_cycle(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    int deg = 0;
    for (Vertex w : s) deg += g.adjacent(v, w);
    if (deg != 2) return false;
  }
  return components(g, s).size() == 1;
}

// Walks the (2-regular, connected) subgraph on s starting at its minimum.
std::vector<Vertex> walk_cycle(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out{s.front()};
  Vertex prev = -1;
  while (out.size() < s.size()) {
    const Vertex cur = out.back();
    for (Vertex w : s) {
      if (w != prev && w != cur && g.adjacent(cur, w) &&
          std::find(out.begin(), out.end(), w) == out.end()) {
        prev = cur;
        out.push_back(w);
        break;
      }
    }
  }
  return canonical_cycle(out);
}

struct Dsatur {
  const Graph& g;
  std::vector<int> colour;
  std::vector<int> best_colour;
  int best;
  int lower;

  // sat[v][c] counts coloured neighbours of v with colour c.
  std::vector<std::vector<int>> seen;

  Dsatur(const Graph& graph, int upper, int lb)
      : g(graph),
        colour(graph.order(), -1),
        best(upper),
        lower(lb),
        seen(graph.order(), std::vector<int>(graph.order() + 1, 0)) {}

  int saturation(Vertex v) const {
    int s = 0;
    for (int c : seen[v]) s += c > 0;
    return s;
  }

  void set(Vertex v, int c, int delta) {
    for (Vertex w : g.neighbours(v)) seen[w][c] += delta;
  }

  void search(int coloured, int used) {
    if (best <= lower) return;
    if (coloured == g.order()) {
      if (used < best) {
        best = used;
        best_colour = colour;
      }
      return;
    }
    Vertex pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (colour[v] >= 0) continue;
      const int s = saturation(v);
      int d = 0;
      for (Vertex w : g.neighbours(v)) d += colour[w] < 0;
      if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
        pick = v;
        pick_sat = s;
        pick_deg = d;
      }
    }
    for (int c = 0; c <= used && c < best - 1; ++c) {
      if (seen[pick][c] > 0) continue;
      colour[pick] = c;
      set(pick, c, 1);
      search(coloured + 1, std::max(used, c + 1));
      set(pick, c, -1);
      colour[pick] = -1;
      if (best <= lower) return;
    }
  }
};

std::vector<int> greedy(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<char> taken(g.order() + 1, 0);
    for (Vertex w : g.neighbours(v)) {
      if (colour[w] >= 0) taken[colour[w]] = 1;
    }
    int c = 0;
    while (taken[c]) ++c;
    colour[v] = c;
  }
  return colour;
}

bool backtrack(const Graph& g, std::vector<int>& colour, Vertex v, int k) {
  if (v == g.order()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (Vertex w = 0; w < v; ++w) {
      if (colour[w] == c && g.adjacent(v, w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colour[v] = c;
    if (backtrack(g, colour, v + 1, k)) return true;
  }
  colour[v] = -1;
  return false;
}

}  // namespace

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 3) return cycle;
  const auto m = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), m, cycle.end());
  if (cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::optional<Path> find_odd_hole_brute(const Graph& g, int max_n) {
  refuse_above("find_odd_hole_brute", g, max_n);
  if (bipartite(g)) return std::nullopt;
  return HoleSearch(g).run();
}

std::optional<Path> find_odd_hole_subsets(const Graph& g, int max_n) {
  refuse_above("find_odd_hole_subsets", g, max_n);
  const int n = g.order();
  std::optional<std::vector<Vertex>> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 5 || size % 2 == 0) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    if (!is_induced_cycle(g, s)) continue;
    auto cyc = walk_cycle(g, s);
    if (!best || cyc < *best) best = std::move(cyc);
  }
  if (!best) return std::nullopt;
  return Path{*best};
}

std::vector<int> optimal_coloring(const Graph& g, int max_n) {
  refuse_above("exact_chromatic", g, max_n);
  if (g.order() == 0) return {};
  const auto start = greedy(g);
  const int upper = *std::max_element(start.begin(), start.end()) + 1;
  Dsatur d(g, upper, clique_number(g, g.vertices()));
  d.best_colour = start;
  d.search(0, 0);
  return d.best_colour;
}

int exact_chromatic(const Graph& g, int max_n) {
  const auto c = optimal_coloring(g, max_n);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

int chromatic_exhaustive(const Graph& g, int max_n) {
  refuse_above("chromatic_exhaustive", g, max_n);
  for (int k = 0;; ++k) {
    std::vector<int> colour(g.order(), -1);
    if (backtrack(g, colour, 0, k)) return k;
  }
}

StepWitness step_witness(const Graph& g, const VertexSet& c, const VertexSet& a) {
  if (c.empty() || !is_clique(g, c) ||
      static_cast<int>(c.size()) != clique_number(g, g.vertices())) {
    throw std::invalid_argument("step_witness: c is not a maximum clique");
  }
  if (!sets_disjoint(c, a)) {
    throw std::invalid_argument("step_witness: a meets c at vertex " +
                                std::to_string(set_intersection(a, c).front()));
  }
  for (Vertex x : c) {
    if (with_neighbour_in(g, {x}, a).empty()) {
      throw std::invalid_argument("step_witness: vertex " + std::to_string(x) +
                                  " of c has no neighbour in a");
    }
  }
  auto in_c = [&](Vertex v) {
    int k = 0;
    for (Vertex x : c) k += g.adjacent(v, x);
    return k;
  };
  Vertex a1 = a.front();
  for (Vertex v : a) {
    if (in_c(v) > in_c(a1)) a1 = v;
  }
  Vertex c2 = -1;
  for (Vertex x : c) {
    if (!g.adjacent(a1, x)) {
      c2 = x;
      break;
    }
  }
  Vertex a2 = -1;
  for (Vertex v : a) {
    if (g.adjacent(v, c2)) {
      a2 = v;
      break;
    }
  }
  Vertex c1 = -1;
  for (Vertex x : c) {
    if (g.adjacent(a1, x) && !g.adjacent(a2, x)) {
      c1 = x;
      break;
    }
  }
  if (c2 < 0 || a2 < 0 || c1 < 0) {
    throw std::logic_error("step_witness: construction failed");
  }
  return {a1, c1, a2, c2};
}

}  // namespace holecolor
