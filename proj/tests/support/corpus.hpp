#pragma once

#include <string>
#include <vector>

#include "holecolor/generators.hpp"
#include "holecolor/graph.hpp"

namespace holecolor::testing {

struct Instance {
  std::string name;
  GeneratorSpec spec;
  Graph graph;
};

/// The fixed 500-graph corpus: 150 bipartite (n <= 60), 150 random cographs
/// (n <= 40), G_1 and G_2, 120 G(n, p) with n <= 16 and 78 planted-hole
/// graphs with n <= 30.
std::vector<Instance> corpus();

}  // namespace holecolor::testing
