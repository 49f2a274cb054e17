#include "holecolor/certificate.hpp"

#include <stdexcept>

namespace holecolor {

using nlohmann::json;

std::optional<std::uint64_t> double_power(int e) {
  if (e < 0 || e > 5) return std::nullopt;
  return std::uint64_t{1} << (1u << e);
}

bool within_double_power(std::uint64_t count, int e) {
  if (e < 0) return false;
  if (e >= 6) return true;  // 2^64 exceeds every uint64
  return count <= *double_power(e);
}

ColoringCertificate make_coloring_certificate(std::vector<VertexSet> classes,
                                              VertexSet clique) {
  ColoringCertificate c;
  c.bound_exponent = static_cast<int>(clique.size()) + 2;
  c.classes = std::move(classes);
  c.clique = std::move(clique);
  return c;
}

namespace {

std::string pair_str(Vertex u, Vertex v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

void verify_coloring(const Graph& g, const ColoringCertificate& c,
                     std::vector<std::string>& fail) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (c.classes[i].empty()) fail.push_back("class " + std::to_string(i) + " is empty");
    for (Vertex v : c.classes[i]) {
      if (!g.valid(v)) {
        fail.push_back("class " + std::to_string(i) + " names vertex " +
                       std::to_string(v) + " outside the graph");
      } else if (colour[v] >= 0) {
        fail.push_back("vertex " + std::to_string(v) + " is in two classes");
      } else {
        colour[v] = static_cast<int>(i);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colour[v] < 0) fail.push_back("vertex " + std::to_string(v) + " is uncoloured");
  }
  for (const auto& [u, v] : g.edges()) {
    if (colour[u] >= 0 && colour[u] == colour[v]) {
      fail.push_back("edge " + pair_str(u, v) + " is monochromatic in class " +
                     std::to_string(colour[u]));
    }
  }

  std::vector<char> seen(n, 0);
  for (Vertex v : c.clique) {
    if (!g.valid(v)) {
      fail.push_back("clique names vertex " + std::to_string(v) +
                     " outside the graph");
    } else if (seen[v]) {
      fail.push_back("clique repeats vertex " + std::to_string(v));
    } else {
      seen[v] = 1;
    }
  }
  for (std::size_t i = 0; i < c.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < c.clique.size(); ++j) {
      const Vertex u = c.clique[i];
      const Vertex v = c.clique[j];
      if (g.valid(u) && g.valid(v) && u != v && !g.adjacent(u, v)) {
        fail.push_back("clique pair " + pair_str(u, v) + " is not an edge");
      }
    }
  }
  if (n > 0 && c.clique.empty()) fail.push_back("clique is empty");

  const int e = static_cast<int>(c.clique.size()) + 2;
  if (c.bound_exponent != e) {
    fail.push_back("bound exponent " + std::to_string(c.bound_exponent) +
                   " does not match clique size " +
                   std::to_string(c.clique.size()));
  }
  if (!within_double_power(c.classes.size(), e)) {
    fail.push_back(std::to_string(c.classes.size()) + " classes exceed " +
                   bound_to_string(e));
  }
}

void verify_hole(const Graph& g, const OddHoleCertificate& h,
                 std::vector<std::string>& fail) {
  const auto& cyc = h.cycle;
  const std::size_t len = cyc.size();
  if (len < 5) fail.push_back("cycle has length " + std::to_string(len) + " < 5");
  if (len % 2 == 0) fail.push_back("cycle has even length " + std::to_string(len));
  std::vector<char> seen(g.order(), 0);
  bool in_range = true;
  for (Vertex v : cyc) {
    if (!g.valid(v)) {
      fail.push_back("cycle names vertex " + std::to_string(v) +
                     " outside the graph");
      in_range = false;
    } else if (seen[v]) {
      fail.push_back("cycle repeats vertex " + std::to_string(v));
    } else {
      seen[v] = 1;
    }
  }
  if (!in_range || len < 3) return;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const Vertex u = cyc[i];
      const Vertex v = cyc[j];
      if (u == v) continue;
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (consecutive && !g.adjacent(u, v)) {
        fail.push_back("cycle edge " + pair_str(u, v) + " is missing");
      } else if (!consecutive && g.adjacent(u, v)) {
        fail.push_back("cycle has chord " + pair_str(u, v));
      }
    }
  }
}

VertexSet int_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  VertexSet out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + " must hold integers");
    }
    out.push_back(x.get<Vertex>());
  }
  return out;
}

}  // namespace

VerifyReport verify_certificate(const Graph& g, const Certificate& c) {
  VerifyReport r;
  if (const auto* col = std::get_if<ColoringCertificate>(&c)) {
    verify_coloring(g, *col, r.failures);
  } else {
    verify_hole(g, std::get<OddHoleCertificate>(c), r.failures);
  }
  return r;
}

json bound_to_json(int exponent) {
  if (auto b = double_power(exponent)) return *b;
  return "2^" + std::to_string(std::uint64_t{1} << exponent);
}

std::string bound_to_string(int exponent) {
  if (auto b = double_power(exponent)) return std::to_string(*b);
  return "2^(2^" + std::to_string(exponent) + ")";
}

json to_json(const Certificate& c) {
  json j;
  if (const auto* col = std::get_if<ColoringCertificate>(&c)) {
    j["type"] = "coloring";
    j["classes"] = col->classes;
    j["clique"] = col->clique;
    j["bound"] = bound_to_json(col->bound_exponent);
  } else {
    j["type"] = "odd_hole";
    j["cycle"] = std::get<OddHoleCertificate>(c).cycle;
  }
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw std::invalid_argument("certificate: missing \"type\"");
  }
  const auto type = j["type"].get<std::string>();
  if (type == "odd_hole") {
    if (!j.contains("cycle")) throw std::invalid_argument("certificate: missing \"cycle\"");
    return OddHoleCertificate{int_array(j["cycle"], "cycle")};
  }
  if (type != "coloring") {
    throw std::invalid_argument("certificate: unknown type \"" + type + "\"");
  }
  if (!j.contains("classes") || !j["classes"].is_array()) {
    throw std::invalid_argument("certificate: missing \"classes\"");
  }
  if (!j.contains("clique")) throw std::invalid_argument("certificate: missing \"clique\"");
  std::vector<VertexSet> classes;
  for (const auto& cls : j["classes"]) classes.push_back(int_array(cls, "class"));
  auto cert = make_coloring_certificate(std::move(classes), int_array(j["clique"], "clique"));
  // A stated bound must be the one the clique implies.
  if (j.contains("bound") && j["bound"] != bound_to_json(cert.bound_exponent)) {
    cert.bound_exponent = -1;
  }
  return cert;
}

}  // namespace holecolor
