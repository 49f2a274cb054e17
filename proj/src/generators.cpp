#include "holecolor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "holecolor/errors.hpp"

namespace holecolor {

using nlohmann::json;
using Family = GeneratorSpec::Family;

Graph gen_substitution(int k, int max_n) {
  if (k < 0) throw std::invalid_argument("gen_substitution: k must be >= 0");
  long long size = 1;
  for (int i = 0; i < k; ++i) {
    size *= 7;
    if (size > max_n) {
      throw SizeRefusal("gen_substitution: 7^" + std::to_string(k) +
                            " vertices exceeds the limit of " +
                            std::to_string(max_n),
                        static_cast<int>(std::min<long long>(size, 1 << 30)),
                        max_n);
    }
  }
  Graph g(1, EdgeList{});
  for (int level = 0; level < k; ++level) {
    const int n = g.order();
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u) {
      // complement of C7 inside the blob
      for (int i = 0; i < 7; ++i) {
        for (int j = i + 2; j < 7; ++j) {
          if (i == 0 && j == 6) continue;
          edges.emplace_back(7 * u + i, 7 * u + j);
        }
      }
      for (Vertex v : g.neighbours(u)) {
        if (v < u) continue;
        for (int i = 0; i < 7; ++i) {
          for (int j = 0; j < 7; ++j) edges.emplace_back(7 * u + i, 7 * v + j);
        }
      }
    }
    g = Graph(7 * n, edges);
  }
  return g;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kSubstitution: return "substitution";
    case Family::kBipartite: return "bipartite";
    case Family::kRandom: return "random";
    case Family::kCograph: return "cograph";
    case Family::kPlantedHole: return "planted-hole";
  }
  return "?";
}

json to_json(const GeneratorSpec& s) {
  json j;
  j["family"] = family_name(s.family);
  switch (s.family) {
    case Family::kSubstitution:
      j["k"] = s.k;
      break;
    case Family::kBipartite:
      j["n"] = s.n;
      j["m"] = s.m;
      j["p"] = s.p;
      break;
    case Family::kRandom:
      j["n"] = s.n;
      j["p"] = s.p;
      break;
    case Family::kCograph:
      j["n"] = s.n;
      break;
    case Family::kPlantedHole:
      j["n"] = s.n;
      j["hole"] = s.hole;
      j["p"] = s.p;
      break;
  }
  j["seed"] = s.seed;
  return j;
}

GeneratorSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("generator spec must be an object");
  GeneratorSpec s;
  const std::string fam = j.value("family", std::string{});
  bool known = false;
  for (Family f : {Family::kSubstitution, Family::kBipartite, Family::kRandom,
                   Family::kCograph, Family::kPlantedHole}) {
    if (family_name(f) == fam) {
      s.family = f;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown generator family \"" + fam + "\"");
  try {
    s.k = j.value("k", s.k);
    s.n = j.value("n", s.n);
    s.m = j.value("m", s.m);
    s.p = j.value("p", s.p);
    s.hole = j.value("hole", s.hole);
    s.seed = j.value("seed", s.seed);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("generator spec: ") + e.what());
  }
  return s;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("gen_family: " + what);
}

Graph random_cograph(int n, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  EdgeList edges;
  // Split a block of the shuffled order at a random point; joins connect the
  // halves completely.
  auto build = [&](auto&& self, int lo, int hi) -> void {
    if (hi - lo <= 1) return;
    const int mid = lo + 1 + static_cast<int>(rng.below(hi - lo - 1));
    if (rng.chance(0.5)) {
      for (int i = lo; i < mid; ++i) {
        for (int j = mid; j < hi; ++j) edges.emplace_back(order[i], order[j]);
      }
    }
    self(self, lo, mid);
    self(self, mid, hi);
  };
  build(build, 0, n);
  return Graph(n, edges);
}

}  // namespace

Graph gen_family(const GeneratorSpec& s) {
  Rng rng(s.seed);
  switch (s.family) {
    case Family::kSubstitution:
      require(s.k >= 0, "k must be >= 0");
      return gen_substitution(s.k);
    case Family::kBipartite: {
      require(s.n >= 0 && s.m >= 0, "sides must be >= 0");
      require(s.p >= 0 && s.p <= 1, "p must lie in [0, 1]");
      EdgeList edges;
      for (int u = 0; u < s.n; ++u) {
        for (int v = 0; v < s.m; ++v) {
          if (rng.chance(s.p)) edges.emplace_back(u, s.n + v);
        }
      }
      return Graph(s.n + s.m, edges);
    }
    case Family::kRandom: {
      require(s.n >= 0, "n must be >= 0");
      require(s.p >= 0 && s.p <= 1, "p must lie in [0, 1]");
      EdgeList edges;
      for (int u = 0; u < s.n; ++u) {
        for (int v = u + 1; v < s.n; ++v) {
          if (rng.chance(s.p)) edges.emplace_back(u, v);
        }
      }
      return Graph(s.n, edges);
    }
    case Family::kCograph:
      require(s.n >= 1, "n must be >= 1");
      return random_cograph(s.n, rng);
    case Family::kPlantedHole: {
      require(s.hole >= 5 && s.hole % 2 == 1, "hole length must be odd and >= 5");
      require(s.n >= s.hole, "n must be at least the hole length");
      require(s.p >= 0 && s.p <= 1, "p must lie in [0, 1]");
      std::vector<Vertex> order(s.n);
      std::iota(order.begin(), order.end(), 0);
      for (int i = s.n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
      EdgeList edges;
      for (int i = 0; i < s.hole; ++i) {
        edges.emplace_back(order[i], order[(i + 1) % s.hole]);
      }
      // Padding never adds a pair inside the hole, so it stays induced.
      for (int i = s.hole; i < s.n; ++i) {
        for (int j = 0; j < i; ++j) {
          if (rng.chance(s.p)) edges.emplace_back(order[i], order[j]);
        }
      }
      Graph g(s.n, edges);
      for (int i = 0; i < s.hole; ++i) {
        for (int j = i + 2; j < s.hole; ++j) {
          if (i == 0 && j == s.hole - 1) continue;
          if (g.adjacent(order[i], order[j])) {
            throw std::logic_error("gen_family: planted hole acquired a chord");
          }
        }
      }
      return g;
    }
  }
  throw std::invalid_argument("gen_family: unknown family");
}

}  // namespace holecolor
