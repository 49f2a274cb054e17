#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "holecolor/graph.hpp"

namespace holecolor {

struct ColoringCertificate {
  std::vector<VertexSet> classes;
  VertexSet clique;
  /// The bound is 2^(2^bound_exponent); bound_exponent = |clique| + 2.
  int bound_exponent = 2;
};

struct OddHoleCertificate {
  std::vector<Vertex> cycle;
};

using Certificate = std::variant<ColoringCertificate, OddHoleCertificate>;

/// 2^(2^e) when it fits in 64 bits.
std::optional<std::uint64_t> double_power(int e);
/// Does count <= 2^(2^e) hold?
bool within_double_power(std::uint64_t count, int e);

ColoringCertificate make_coloring_certificate(std::vector<VertexSet> classes,
                                              VertexSet clique);

struct VerifyReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

VerifyReport verify_certificate(const Graph& g, const Certificate& c);

// {"type":"coloring","classes":[[..]],"clique":[..],"bound":N} or
// {"type":"odd_hole","cycle":[..]}. A bound above 2^64-1 is written as the
// string "2^E".
nlohmann::json to_json(const Certificate& c);
/// Throws std::invalid_argument on a malformed document.
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json bound_to_json(int exponent);
std::string bound_to_string(int exponent);

}  // namespace holecolor
