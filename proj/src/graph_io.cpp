#include "holecolor/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace holecolor {

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

Graph build_or_throw(int n, const EdgeList& edges, int line) {
  try {
    return Graph(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  EdgeList edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError("duplicate problem line", line_no);
      std::string kind;
      long long nv = -1;
      long long ne = -1;
      if (!(fields >> kind >> nv >> ne) || (kind != "edge" && kind != "col") ||
          nv < 0 || ne < 0) {
        throw ParseError("malformed problem line, expected 'p edge <n> <m>'",
                         line_no);
      }
      n = static_cast<int>(nv);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError("edge before problem line", line_no);
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) throw ParseError("malformed edge line", line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError("vertex id out of range", line_no);
      }
      if (u == v) throw ParseError("self-loop", line_no);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw ParseError("unknown line tag '" + tag + "'", line_no);
  }
  if (n < 0) throw ParseError("missing problem line", line_no);
  return build_or_throw(n, edges, line_no);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  EdgeList edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream fields(line);
    std::string extra;
    if (n < 0) {
      long long nv = -1;
      if (!(fields >> nv) || nv < 0 || (fields >> extra)) {
        throw ParseError("expected a vertex count", line_no);
      }
      n = static_cast<int>(nv);
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw ParseError("expected '<u> <v>'", line_no);
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("vertex id out of range", line_no);
    }
    if (u == v) throw ParseError("self-loop", line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("missing vertex count", line_no);
  return build_or_throw(n, edges, line_no);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::kDimacs) return read_dimacs(in);
  if (format == GraphFormat::kEdgeList) return read_edge_list(in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    char c = line[pos];
    std::istringstream again(text);
    if (c == 'c' || c == 'p' || c == 'e') return read_dimacs(again);
    return read_edge_list(again);
  }
  throw ParseError("empty input", 0);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  if (format == GraphFormat::kAuto && path.size() >= 4 &&
      path.compare(path.size() - 4, 4, ".col") == 0) {
    format = GraphFormat::kDimacs;
  }
  return read_graph(in, format);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::kDimacs) {
    write_dimacs(out, g);
  } else {
    write_edge_list(out, g);
  }
}

GraphFormat parse_format(const std::string& name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "dimacs" || name == "col") return GraphFormat::kDimacs;
  if (name == "edge-list" || name == "edgelist" || name == "edges") return GraphFormat::kEdgeList;
  throw std::invalid_argument("unknown graph format '" + name + "'");
}

}  // namespace holecolor
