#include "holecolor/cograph.hpp"

#include <algorithm>
#include <ostream>

namespace holecolor {

namespace {

std::vector<VertexSet> complement_components(const Graph& g,
                                             const VertexSet& s) {
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
      for (Vertex w : s) {
        if (!seen[w] && w != v && !g.adjacent(v, w)) {
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

std::optional<P4Witness> find_p4(const Graph& g, const VertexSet& s) {
  const std::size_t m = s.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        for (std::size_t d = c + 1; d < m; ++d) {
          std::array<Vertex, 4> quad{s[a], s[b], s[c], s[d]};
          do {
            P4Witness w{quad};
            if (is_p4(g, w)) return w;
          } while (std::next_permutation(quad.begin(), quad.end()));
        }
      }
    }
  }
  return std::nullopt;
}

CotreeResult build(const Graph& g, const VertexSet& s) {
  if (s.size() == 1) return Cotree::make_leaf(s.front());
  Cotree node;
  auto parts = components(g, s);
  if (parts.size() > 1) {
    node.kind = Cotree::Kind::kUnion;
  } else {
    parts = complement_components(g, s);
    if (parts.size() == 1) {
      if (auto w = find_p4(g, s)) return *w;
      // Connected with connected complement and at least two vertices always
      // contains an induced P4.
      throw std::logic_error("cotree: no P4 found in a prime subgraph");
    }
    node.kind = Cotree::Kind::kJoin;
  }
  for (const auto& part : parts) {
    auto child = build(g, part);
    if (auto* w = std::get_if<P4Witness>(&child)) return *w;
    node.children.push_back(std::move(std::get<Cotree>(child)));
  }
  return node;
}

void collect_leaves(const Cotree& t, VertexSet& out) {
  if (t.kind == Cotree::Kind::kLeaf) {
    out.push_back(t.leaf);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

bool canonical(const Cotree& t) {
  if (t.kind == Cotree::Kind::kLeaf) return t.children.empty();
  if (t.children.size() < 2) return false;
  Vertex last = -1;
  for (const auto& c : t.children) {
    if (c.kind == t.kind) return false;
    auto leaves = c.leaves();
    if (leaves.front() <= last) return false;
    last = leaves.front();
    if (!canonical(c)) return false;
  }
  return true;
}

int write_node(std::ostream& out, const Cotree& t, int& next_id) {
  const int id = next_id++;
  switch (t.kind) {
    case Cotree::Kind::kLeaf:
      out << "  n" << id << " [label=\"" << t.leaf << "\", shape=circle];\n";
      return id;
    case Cotree::Kind::kUnion:
      out << "  n" << id << " [label=\"union\", shape=box];\n";
      break;
    case Cotree::Kind::kJoin:
      out << "  n" << id << " [label=\"join\", shape=box];\n";
      break;
  }
  for (const auto& c : t.children) {
    int child = write_node(out, c, next_id);
    out << "  n" << id << " -- n" << child << ";\n";
  }
  return id;
}

}  // namespace

VertexSet Cotree::leaves() const {
  VertexSet out;
  collect_leaves(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

CotreeResult build_cotree(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("build_cotree: empty vertex set");
  return build(g, s);
}

CotreeResult build_cotree(const Graph& h) {
  return build_cotree(h, h.vertices());
}

bool is_p4(const Graph& g, const P4Witness& w) {
  const auto& p = w.path;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

std::vector<VertexSet> cograph_color(const Cotree& t) {
  if (t.kind == Cotree::Kind::kLeaf) return {{t.leaf}};
  std::vector<VertexSet> out;
  for (const auto& c : t.children) {
    auto sub = cograph_color(c);
    if (t.kind == Cotree::Kind::kJoin) {
      for (auto& cls : sub) out.push_back(std::move(cls));
    } else {
      if (out.size() < sub.size()) out.resize(sub.size());
      for (std::size_t i = 0; i < sub.size(); ++i) {
        out[i] = set_union(out[i], sub[i]);
      }
    }
  }
  return out;
}

int cotree_omega(const Cotree& t) {
  if (t.kind == Cotree::Kind::kLeaf) return 1;
  int acc = 0;
  for (const auto& c : t.children) {
    int w = cotree_omega(c);
    acc = t.kind == Cotree::Kind::kJoin ? acc + w : std::max(acc, w);
  }
  return acc;
}

bool cotree_adjacent(const Cotree& t, Vertex u, Vertex v) {
  const Cotree* node = &t;
  while (node->kind != Cotree::Kind::kLeaf) {
    const Cotree* holder_u = nullptr;
    const Cotree* holder_v = nullptr;
    for (const auto& c : node->children) {
      auto leaves = c.leaves();
      if (set_contains(leaves, u)) holder_u = &c;
      if (set_contains(leaves, v)) holder_v = &c;
    }
    if (holder_u == nullptr || holder_v == nullptr) return false;
    if (holder_u != holder_v) return node->kind == Cotree::Kind::kJoin;
    node = holder_u;
  }
  return false;
}

bool cotree_represents(const Cotree& t, const Graph& g, const VertexSet& s) {
  if (!canonical(t)) return false;
  if (t.leaves() != s) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (cotree_adjacent(t, s[i], s[j]) != g.adjacent(s[i], s[j])) {
        return false;
      }
    }
  }
  return true;
}

void write_dot(std::ostream& out, const Cotree& t) {
  out << "graph cotree {\n";
  int next_id = 0;
  write_node(out, t, next_id);
  out << "}\n";
}

}  // namespace holecolor
