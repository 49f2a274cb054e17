#include "fixtures.hpp"

#include "holecolor/testkit.hpp"

namespace holecolor::testing {

Graph cycle(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph star(int leaves) {
  EdgeList e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  EdgeList e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, e);
}

Graph petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph from_mask(int n, std::uint32_t mask) {
  EdgeList e;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  GeneratorSpec s;
  s.family = GeneratorSpec::Family::kRandom;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return gen_family(s);
}

namespace {

void extend(const Graph& g, std::vector<Vertex>& path, Vertex target,
            const std::vector<char>& allowed, std::vector<char>& on,
            const std::function<void(const Path&)>& fn) {
  const Vertex last = path.back();
  for (Vertex w : g.neighbours(last)) {
    if (on[w]) continue;
    const bool is_target = w == target;
    if (!is_target && !allowed[w]) continue;
    bool chord = false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (g.adjacent(w, path[i])) {
        chord = true;
        break;
      }
    }
    if (chord) continue;
    if (!is_target && g.adjacent(w, target)) {
      path.push_back(w);
      path.push_back(target);
      fn(Path{path});
      path.pop_back();
      path.pop_back();
      continue;
    }
    if (is_target) {
      path.push_back(w);
      fn(Path{path});
      path.pop_back();
      continue;
    }
    path.push_back(w);
    on[w] = 1;
    extend(g, path, target, allowed, on, fn);
    on[w] = 0;
    path.pop_back();
  }
}

Graph complement_of(const Graph& g) { return g.complement(); }

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  EdgeList out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) out.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(edges.size()), out);
}

}  // namespace

void for_each_induced_path(const Graph& g, Vertex u, Vertex v,
                           const VertexSet& interior,
                           const std::function<void(const Path&)>& fn) {
  if (g.adjacent(u, v)) {
    fn(Path{{u, v}});
    return;
  }
  std::vector<char> allowed(g.order(), 0);
  for (Vertex x : interior) allowed[x] = 1;
  allowed[u] = allowed[v] = 0;
  std::vector<char> on(g.order(), 0);
  on[u] = 1;
  std::vector<Vertex> path{u};
  extend(g, path, v, allowed, on, fn);
}

std::vector<Graph> odd_hole_free_sample(int count, int max_n, std::uint64_t seed) {
  std::vector<Graph> out;
  Rng rng(seed);
  while (static_cast<int>(out.size()) < count) {
    const int n = 4 + static_cast<int>(rng.below(max_n - 3));
    Graph g(0, EdgeList{});
    switch (rng.below(4)) {
      case 0:
        g = random_graph(n, 0.2 + 0.5 * rng.unit(), rng.next());
        break;
      case 3: {
        // sparse bipartite: stable levels with many long induced paths
        GeneratorSpec s;
        s.family = GeneratorSpec::Family::kBipartite;
        s.n = n / 2;
        s.m = n - n / 2;
        s.p = 0.25 + 0.3 * rng.unit();
        s.seed = rng.next();
        g = gen_family(s);
        break;
      }
      case 1: {
        GeneratorSpec s;
        s.family = GeneratorSpec::Family::kBipartite;
        s.n = n / 2;
        s.m = n - n / 2;
        s.p = 0.3 + 0.5 * rng.unit();
        s.seed = rng.next();
        g = complement_of(gen_family(s));
        break;
      }
      default: {
        GeneratorSpec s;
        s.family = GeneratorSpec::Family::kBipartite;
        s.n = 2 + static_cast<int>(rng.below(4));
        s.m = 2 + static_cast<int>(rng.below(4));
        s.p = 0.4 + 0.4 * rng.unit();
        s.seed = rng.next();
        g = line_graph(gen_family(s));
        if (g.order() > max_n || g.order() == 0) continue;
        break;
      }
    }
    if (find_odd_hole_brute(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace holecolor::testing

namespace holecolor::testing {

std::optional<SplitCase> split_case(std::uint64_t seed) {
  Rng rng(seed);
  const int n = 6 + static_cast<int>(rng.below(9));
  Graph g(0, EdgeList{});
  if (rng.below(2) == 0) {
    g = random_graph(n, 0.25 + 0.5 * rng.unit(), rng.next());
  } else {
    // two random cographs glued along a path give deeper levellings
    GeneratorSpec s;
    s.family = GeneratorSpec::Family::kCograph;
    s.n = n / 2;
    s.seed = rng.next();
    const Graph c1 = gen_family(s);
    s.n = n - n / 2;
    s.seed = rng.next();
    const Graph c2 = gen_family(s);
    EdgeList e = c1.edges();
    const int off = c1.order();
    for (const auto& [u, v] : c2.edges()) e.emplace_back(u + off + 1, v + off + 1);
    // bridge vertex `off` joins a random vertex on each side
    e.emplace_back(static_cast<int>(rng.below(off)), off);
    e.emplace_back(off, off + 1 + static_cast<int>(rng.below(c2.order())));
    g = Graph(off + 1 + c2.order(), e);
  }
  const auto comp = components(g).front();
  const Levelling lv = bfs_levelling(g, comp.front(), comp);
  std::vector<int> ts;
  for (int t = 1; t < lv.top(); ++t) {
    if (is_stable(g, lv.level(t)) && !check_parent_rule(lv, t - 1)) ts.push_back(t);
  }
  if (ts.empty()) return std::nullopt;
  const int t = ts[rng.below(ts.size())];
  const auto tops = components(g, lv.level(t + 1));
  const VertexSet& top = tops[rng.below(tops.size())];
  const Levelling sub = prune_unanchored(restrict_top(lv.truncated(t + 1), top));
  SplitCase c;
  try {
    c.h = parity_graph(sub, t).graph;
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
  c.a = sub.level(t);
  c.b = top;
  c.w = clique_number(g, g.vertices());
  c.g = std::move(g);
  return c;
}

}  // namespace holecolor::testing
