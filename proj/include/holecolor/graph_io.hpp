#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "holecolor/graph.hpp"

namespace holecolor {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class GraphFormat { kAuto, kDimacs, kEdgeList };

// DIMACS .col: "c" comment lines, one "p edge <n> <m>" header, then
// "e <u> <v>" lines with 1-based ids. The edge count in the header is not
// enforced because many published instances list each edge twice.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// Edge list: vertex count, then one "<u> <v>" pair per line, 0-based.
// Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph read_graph(std::istream& in, GraphFormat format);
Graph read_graph_file(const std::string& path,
                      GraphFormat format = GraphFormat::kAuto);
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

GraphFormat parse_format(const std::string& name);

}  // namespace holecolor
