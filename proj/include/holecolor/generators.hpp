#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "json.hpp"

#include "holecolor/graph.hpp"

namespace holecolor {

/// G_0 = K1; G_k substitutes the complement of C7 for every vertex of
/// G_{k-1}. Vertex 7u + i is copy i of old vertex u. Throws SizeRefusal when
/// 7^k exceeds max_n.
Graph gen_substitution(int k, int max_n = 2401);

struct GeneratorSpec {
  enum class Family { kSubstitution, kBipartite, kRandom, kCograph, kPlantedHole };
  Family family = Family::kRandom;
  int k = 1;          // substitution depth
  int n = 10;         // vertices (left side for bipartite)
  int m = 0;          // right side for bipartite
  double p = 0.5;     // edge probability
  int hole = 5;       // planted hole length
  std::uint64_t seed = 1;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

std::string family_name(GeneratorSpec::Family f);

/// One-line JSON, e.g. {"family":"bipartite","m":3,"n":3,"p":1.0,"seed":7}.
nlohmann::json to_json(const GeneratorSpec& s);
/// Throws std::invalid_argument on unknown families or bad parameters.
GeneratorSpec spec_from_json(const nlohmann::json& j);

/// Deterministic in the spec. Throws std::invalid_argument on bad parameters.
Graph gen_family(const GeneratorSpec& spec);

/// std::mt19937_64 with fixed integer-to-range mappings; the standard
/// distributions are implementation-defined, so they are avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace holecolor
