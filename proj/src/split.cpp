#include <algorithm>
#include <stdexcept>
#include <variant>

#include "holecolor/cograph.hpp"
#include "holecolor/colorer.hpp"
#include "holecolor/errors.hpp"

namespace holecolor {

namespace {

VertexSet union_of(const std::vector<VertexSet>& sets) {
  VertexSet out;
  for (const auto& s : sets) out = set_union(out, s);
  return out;
}

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// Induction on |A|: returns a partition of the union Z of all w-cliques in B
// such that every w-clique in B meets both sides.
class CliqueSplitter {
 public:
  CliqueSplitter(const Graph& g, const VertexSet& a, const Graph& h, int w)
      : g_(g), a_(a), h_(h), w_(w) {}

  SplitResult run(const VertexSet& aa, const VertexSet& bb) {
    const auto cliques = cliques_of_size(g_, bb, w_);
    if (cliques.empty()) return {};
    // A w-clique with a common neighbour would beat the clique number; if one
    // is here anyway the final postcondition check reports it.
    if (aa.size() == 1) return {bb, {}};

    auto tree = build_cotree(h_, to_local(aa));
    if (auto* p4 = std::get_if<P4Witness>(&tree)) {
      VertexSet witness;
      for (Vertex v : p4->path) witness.push_back(a_[v]);
      throw StructureViolation("split-cograph",
                               "parity graph contains an induced P4",
                               make_set(witness));
    }
    const Cotree& root = std::get<Cotree>(tree);
    const VertexSet a1 = to_global(root.children.front().leaves());
    const VertexSet a2 = set_difference(aa, a1);

    if (root.kind == Cotree::Kind::kJoin) return join_case(a1, a2, bb, cliques);
    return union_case(a1, a2, bb, cliques);
  }

 private:
  SplitResult join_case(const VertexSet& a1, const VertexSet& a2,
                        const VertexSet& bb,
                        const std::vector<VertexSet>& cliques) {
    const VertexSet b1 = with_neighbour_in(g_, bb, a1);
    const VertexSet b2 = with_neighbour_in(g_, bb, a2);
    if (const auto both = set_intersection(b1, b2); !both.empty()) {
      throw StructureViolation(
          "split-join-overlap",
          "vertex " + std::to_string(both.front()) +
              " has neighbours on both sides of a join",
          {both.front()});
    }
    std::vector<VertexSet> in1;
    std::vector<VertexSet> in2;
    std::vector<VertexSet> across;
    for (const auto& c : cliques) {
      const bool meets1 = !sets_disjoint(c, b1);
      const bool meets2 = !sets_disjoint(c, b2);
      if (meets1 && meets2) {
        across.push_back(c);
      } else if (meets1) {
        in1.push_back(c);
      } else {
        in2.push_back(c);
      }
    }
    const VertexSet z0 = union_of(across);
    const VertexSet z1 = union_of(in1);
    const VertexSet z2 = union_of(in2);
    if (!sets_disjoint(z0, z1) || !sets_disjoint(z0, z2)) {
      throw StructureViolation(
          "split-join-z0",
          "a clique crossing the join shares a vertex with a one-sided clique",
          set_intersection(z0, set_union(z1, z2)));
    }
    auto s1 = run(a1, z1);
    auto s2 = run(a2, z2);
    SplitResult out;
    out.x = set_union(set_union(s1.x, s2.x), set_intersection(b1, z0));
    out.y = set_union(set_union(s1.y, s2.y), set_intersection(b2, z0));
    return out;
  }

  SplitResult union_case(const VertexSet& a1, const VertexSet& a2,
                         const VertexSet& bb,
                         const std::vector<VertexSet>& cliques) {
    const VertexSet n1 = with_neighbour_in(g_, bb, a1);
    const VertexSet n2 = with_neighbour_in(g_, bb, a2);
    const VertexSet b1 = set_difference(n1, n2);
    const VertexSet b2 = set_difference(n2, n1);
    for (const auto& c : cliques) {
      if (std::includes(b1.begin(), b1.end(), c.begin(), c.end())) continue;
      if (std::includes(b2.begin(), b2.end(), c.begin(), c.end())) continue;
      throw StructureViolation("split-union-clique",
                               "clique " + describe(c) +
                                   " is not inside one side of a union",
                               c);
    }
    auto s1 = run(a1, b1);
    auto s2 = run(a2, b2);
    return {set_union(s1.x, s2.x), set_union(s1.y, s2.y)};
  }

  VertexSet to_local(const VertexSet& vs) const {
    VertexSet out;
    for (Vertex v : vs) {
      out.push_back(static_cast<Vertex>(
          std::lower_bound(a_.begin(), a_.end(), v) - a_.begin()));
    }
    return out;
  }

  VertexSet to_global(const VertexSet& local) const {
    VertexSet out;
    for (Vertex i : local) out.push_back(a_[i]);
    return make_set(out);
  }

  const Graph& g_;
  const VertexSet& a_;
  const Graph& h_;
  int w_;
};

}  // namespace

SplitResult split_cliques(const Graph& g, const VertexSet& a, const Graph& h,
                          const VertexSet& b, int w) {
  if (w < 1) throw std::invalid_argument("split_cliques: w must be >= 1");
  if (h.order() != static_cast<int>(a.size())) {
    throw std::invalid_argument("split_cliques: h must have one vertex per a");
  }
  if (!is_stable(g, a)) throw std::invalid_argument("split_cliques: a not stable");
  if (with_neighbour_in(g, b, a).size() != b.size()) {
    throw std::invalid_argument(
        "split_cliques: some vertex of b has no neighbour in a");
  }
  if (a.empty()) {
    if (b.empty()) return {};
    throw std::invalid_argument("split_cliques: empty a");
  }

  SplitResult out = CliqueSplitter(g, a, h, w).run(a, b);
  out.x = set_union(out.x, set_difference(b, set_union(out.x, out.y)));

  for (const auto& c : cliques_of_size(g, b, w)) {
    if (sets_disjoint(c, out.x) || sets_disjoint(c, out.y)) {
      throw StructureViolation("split-postcondition",
                               "clique " + describe(c) + " misses one side", c);
    }
  }
  return out;
}

}  // namespace holecolor
