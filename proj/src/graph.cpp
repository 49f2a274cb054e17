#include "holecolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

namespace holecolor {

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(n) {
  if (n < 0) throw GraphError("negative vertex count", n, n);
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  adj_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("vertex id out of range in edge (" + std::to_string(u) +
                           "," + std::to_string(v) + ")",
                       u, v);
    }
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u), u, v);
    }
    auto& cell = matrix_[static_cast<std::size_t>(u) * n + v];
    if (cell) continue;
    cell = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::vertices() const {
  VertexSet all(n_);
  for (Vertex v = 0; v < n_; ++v) all[v] = v;
  return all;
}

Graph Graph::induced(const VertexSet& s) const {
  std::vector<int> local(n_, -1);
  for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = static_cast<int>(i);
  EdgeList edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : adj_[s[i]]) {
      if (local[w] > static_cast<int>(i)) {
        edges.emplace_back(static_cast<int>(i), local[w]);
      }
    }
  }
  return Graph(static_cast<int>(s.size()), edges);
}

Graph Graph::complement() const {
  EdgeList edges;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n_, edges);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

VertexSet with_neighbour_in(const Graph& g, const VertexSet& s,
                            const VertexSet& t) {
  VertexSet out;
  for (Vertex v : s) {
    for (Vertex w : t) {
      if (g.adjacent(v, w)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> out;
  for (Vertex root : s) {
    if (seen[root]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, g.vertices());
}

namespace {

// Branch and bound over ascending candidate lists. Only strictly larger
// cliques replace the incumbent, and branches are explored in ascending
// order, so the first maximum found is the lexicographically smallest.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run(const VertexSet& s) {
    best_.clear();
    VertexSet current;
    expand(current, s);
    return best_;
  }

 private:
  // Greedy sequential colouring of `cand` gives, for each suffix, an upper
  // bound on the clique number of that suffix.
  std::vector<int> suffix_bounds(const VertexSet& cand) const {
    std::vector<int> colour(cand.size(), 0);
    std::vector<VertexSet> classes;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (Vertex w : classes[c]) {
          if (g_.adjacent(cand[i], w)) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(cand[i]);
      colour[i] = static_cast<int>(c);
    }
    std::vector<int> bound(cand.size() + 1, 0);
    std::vector<char> used(classes.size(), 0);
    int distinct = 0;
    for (std::size_t i = cand.size(); i-- > 0;) {
      if (!used[colour[i]]) {
        used[colour[i]] = 1;
        ++distinct;
      }
      bound[i] = distinct;
    }
    return bound;
  }

  void expand(VertexSet& current, const VertexSet& cand) {
    if (current.size() > best_.size()) best_ = current;
    if (cand.empty()) return;
    const auto bound = suffix_bounds(cand);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (current.size() + bound[i] <= best_.size()) return;
      Vertex v = cand[i];
      VertexSet next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (g_.adjacent(v, cand[j])) next.push_back(cand[j]);
      }
      current.push_back(v);
      expand(current, next);
      current.pop_back();
    }
  }

  const Graph& g_;
  VertexSet best_;
};

void enumerate_cliques(const Graph& g, VertexSet& current,
                       const VertexSet& cand, int w,
                       std::vector<VertexSet>& out, bool stop_at_first) {
  if (static_cast<int>(current.size()) == w) {
    out.push_back(current);
    return;
  }
  const std::size_t need = w - current.size();
  for (std::size_t i = 0; i + need <= cand.size(); ++i) {
    VertexSet next;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (g.adjacent(cand[i], cand[j])) next.push_back(cand[j]);
    }
    if (next.size() + 1 < need) continue;
    current.push_back(cand[i]);
    enumerate_cliques(g, current, next, w, out, stop_at_first);
    current.pop_back();
    if (stop_at_first && !out.empty()) return;
  }
}

}  // namespace

VertexSet max_clique(const Graph& g, const VertexSet& s) {
  return MaxCliqueSearch(g).run(s);
}

VertexSet max_clique(const Graph& g) { return max_clique(g, g.vertices()); }

int clique_number(const Graph& g, const VertexSet& s) {
  return static_cast<int>(max_clique(g, s).size());
}

std::vector<VertexSet> cliques_of_size(const Graph& g, const VertexSet& s,
                                       int w) {
  std::vector<VertexSet> out;
  if (w < 1) return out;
  VertexSet current;
  enumerate_cliques(g, current, s, w, out, false);
  return out;
}

bool has_clique_of_size(const Graph& g, const VertexSet& s, int w) {
  if (w < 1) return true;
  std::vector<VertexSet> out;
  VertexSet current;
  enumerate_cliques(g, current, s, w, out, true);
  return !out.empty();
}

std::optional<Path> shortest_path_within(const Graph& g, Vertex u, Vertex v,
                                         const VertexSet& allowed_interior) {
  std::vector<char> allowed(g.order(), 0);
  for (Vertex x : allowed_interior) allowed[x] = 1;
  allowed[u] = 1;
  allowed[v] = 1;
  std::vector<Vertex> prev(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  std::deque<Vertex> queue{u};
  seen[u] = 1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (Vertex y : g.neighbours(x)) {
      if (allowed[y] && !seen[y]) {
        seen[y] = 1;
        prev[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (!seen[v]) return std::nullopt;
  Path p;
  for (Vertex x = v; x != -1; x = prev[x]) p.vertices.push_back(x);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

bool is_induced_path(const Graph& g, const Path& p) {
  const auto& vs = p.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.valid(vs[i])) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return false;
      if (g.adjacent(vs[i], vs[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

}  // namespace holecolor
