// holecolor: colour graphs with a clique-bound certificate, or find an odd hole.
//
// Exit codes: 0 success / colouring, 10 odd hole found, 1 verification
// failed, 2 bad input, 3 internal error, 4 size refusal.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "holecolor/certificate.hpp"
#include "holecolor/colorer.hpp"
#include "holecolor/errors.hpp"
#include "holecolor/generators.hpp"
#include "holecolor/graph_io.hpp"
#include "holecolor/testkit.hpp"

namespace fs = std::filesystem;
using namespace holecolor;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;
constexpr int kRefused = 4;
constexpr int kOddHole = 10;

struct RunConfig {
  std::string input;
  std::string certificate;
  std::string format = "auto";
  std::string output;
  std::string emit_dot;
  std::string spec;
  bool no_fallback = false;
  bool no_timing = false;
  bool stats = false;
  int max_detect_n = 64;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load_graph(const RunConfig& cfg) {
  if (!fs::exists(cfg.input)) throw InputError("no such file: " + cfg.input);
  try {
    return read_graph_file(cfg.input, parse_format(cfg.format));
  } catch (const ParseError& e) {
    throw InputError(cfg.input + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(cfg.input + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void write_dot(const std::string& path, const Graph& g, const Certificate& c) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  std::vector<int> label(g.order(), -1);
  std::vector<char> hole(g.order(), 0);
  if (const auto* col = std::get_if<ColoringCertificate>(&c)) {
    for (std::size_t i = 0; i < col->classes.size(); ++i) {
      for (Vertex v : col->classes[i]) label[v] = static_cast<int>(i);
    }
  } else {
    for (Vertex v : std::get<OddHoleCertificate>(c).cycle) hole[v] = 1;
  }
  out << "graph G {\n";
  for (Vertex v : g.vertices()) {
    out << "  " << v << " [label=\"" << v;
    if (label[v] >= 0) out << ":" << label[v];
    out << "\"";
    if (hole[v]) out << ", color=red";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

json stats_json(const EngineStats& s) {
  return {{"sub_calls", s.sub_calls},       {"cache_hits", s.cache_hits},
          {"comb_calls", s.comb_calls},     {"ult_calls", s.ult_calls},
          {"transform_calls", s.transform_calls},
          {"split_calls", s.split_calls},   {"parity_graphs", s.parity_graphs},
          {"p4_in_parity_graph", s.p4_in_parity_graph},
          {"p4_in_level_cograph", s.p4_in_level_cograph}};
}

int cmd_color(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  ColorOptions opts;
  opts.fallback_detector = !cfg.no_fallback;
  opts.max_detect_n = cfg.max_detect_n;
  const ColorOutcome out = color_graph_detailed(g, opts);
  std::cout << to_json(out.certificate).dump() << "\n";
  if (out.violation) std::cerr << "structure violation: " << *out.violation << "\n";
  if (cfg.stats) std::cerr << stats_json(out.stats).dump() << "\n";
  if (!cfg.emit_dot.empty()) write_dot(cfg.emit_dot, g, out.certificate);
  return std::holds_alternative<OddHoleCertificate>(out.certificate) ? kOddHole : kOk;
}

int cmd_detect(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  const auto hole = find_odd_hole_brute(g, cfg.max_detect_n);
  if (!hole) {
    std::cout << "none\n";
    return kOk;
  }
  std::cout << to_json(OddHoleCertificate{hole->vertices}).dump() << "\n";
  return kOddHole;
}

int cmd_verify(const RunConfig& cfg) {
  const Graph g = load_graph(cfg);
  std::ifstream in(cfg.certificate);
  if (!in) throw InputError("no such file: " + cfg.certificate);
  Certificate cert;
  try {
    cert = certificate_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw InputError(cfg.certificate + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(cfg.certificate + ": " + e.what());
  }
  const auto report = verify_certificate(g, cert);
  if (report.ok()) {
    std::cout << "pass\n";
    return kOk;
  }
  for (const auto& f : report.failures) std::cout << "fail: " << f << "\n";
  return kVerifyFailed;
}

int cmd_gen(const RunConfig& cfg) {
  GeneratorSpec spec;
  Graph g(0, EdgeList{});
  try {
    spec = spec_from_json(json::parse(cfg.spec));
    g = gen_family(spec);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad spec: ") + e.what());
  }
  const GraphFormat fmt =
      cfg.format == "auto" ? GraphFormat::kDimacs : parse_format(cfg.format);
  std::ostringstream body;
  write_graph(body, g, fmt);
  const std::string header = (fmt == GraphFormat::kDimacs ? "c " : "# ") +
                             to_json(spec).dump() + "\n";
  if (cfg.output.empty()) {
    std::cout << header << body.str();
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw InputError("cannot write " + cfg.output);
    out << header << body.str();
  }
  return kOk;
}

std::string ratio_string(std::size_t classes, int exponent) {
  // classes / 2^(2^e), via logarithms to stay finite
  const double log2_ratio =
      std::log2(static_cast<double>(std::max<std::size_t>(classes, 1))) -
      std::ldexp(1.0, exponent);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", std::exp2(log2_ratio));
  return buf;
}

int cmd_bench(const RunConfig& cfg) {
  if (!fs::is_directory(cfg.input)) throw InputError("not a directory: " + cfg.input);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(cfg.input)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::cout << "instance,n,omega,classes,bound,ratio,wall_ms,outcome\n";
  int status = kOk;
  for (const auto& path : files) {
    RunConfig one = cfg;
    one.input = path.string();
    const std::string name = path.filename().string();
    Graph g(0, EdgeList{});
    try {
      g = load_graph(one);
    } catch (const InputError& e) {
      std::cerr << e.what() << "\n";
      std::cout << name << ",,,,,,,input-error\n";
      status = kBadInput;
      continue;
    }
    const int omega = clique_number(g, g.vertices());
    const auto start = std::chrono::steady_clock::now();
    std::string outcome;
    std::string classes;
    std::string bound;
    std::string ratio;
    try {
      ColorOptions opts;
      opts.fallback_detector = !cfg.no_fallback;
      opts.max_detect_n = cfg.max_detect_n;
      const auto out = color_graph_detailed(g, opts);
      if (const auto* col = std::get_if<ColoringCertificate>(&out.certificate)) {
        outcome = "coloring";
        classes = std::to_string(col->classes.size());
        bound = bound_to_string(col->bound_exponent);
        ratio = ratio_string(col->classes.size(), col->bound_exponent);
      } else {
        outcome = "odd-hole";
      }
    } catch (const InternalError& e) {
      std::cerr << name << ": " << e.what() << "\n";
      outcome = "internal-error";
      status = kInternal;
    }
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", cfg.no_timing ? 0.0 : ms);
    std::cout << name << "," << g.order() << "," << omega << "," << classes
              << "," << bound << "," << ratio << "," << wall << "," << outcome
              << "\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colour a graph within 2^(2^(omega+2)) colours or exhibit an odd hole"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* color = app.add_subcommand("color", "Print a certificate as JSON");
  color->add_option("graph", cfg.input, "Graph file (.col DIMACS or edge list)")->required();
  color->add_option("--format", cfg.format, "auto, dimacs or edge-list");
  color->add_option("--emit-dot", cfg.emit_dot, "Write the coloured graph as DOT");
  color->add_flag("--no-fallback", cfg.no_fallback,
                  "Fail instead of searching for an odd hole");
  color->add_option("--max-detect-n", cfg.max_detect_n, "Detector size limit");
  color->add_flag("--stats", cfg.stats, "Print recursion counters to stderr");

  auto* detect = app.add_subcommand("detect", "Search for an odd hole");
  detect->add_option("graph", cfg.input)->required();
  detect->add_option("--format", cfg.format);
  detect->add_option("--max-n", cfg.max_detect_n, "Size limit");

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("graph", cfg.input)->required();
  verify->add_option("certificate", cfg.certificate)->required();
  verify->add_option("--format", cfg.format);

  auto* gen = app.add_subcommand("gen", "Generate a graph from a JSON spec");
  gen->add_option("spec", cfg.spec, R"(e.g. '{"family":"bipartite","n":3,"m":3,"p":1,"seed":1}')")
      ->required();
  gen->add_option("-o,--output", cfg.output, "Output file (default stdout)");
  gen->add_option("--format", cfg.format, "dimacs (default) or edge-list");

  auto* bench = app.add_subcommand("bench", "Colour every graph in a directory, CSV out");
  bench->add_option("dir", cfg.input)->required();
  bench->add_option("--format", cfg.format);
  bench->add_flag("--no-timing", cfg.no_timing, "Write 0 for wall time");
  bench->add_flag("--no-fallback", cfg.no_fallback);
  bench->add_option("--max-detect-n", cfg.max_detect_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*color) return cmd_color(cfg);
    if (*detect) return cmd_detect(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*gen) return cmd_gen(cfg);
    if (*bench) return cmd_bench(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const SizeRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kBadInput;
}
