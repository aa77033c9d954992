#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "couponkit/graph.hpp"

namespace couponkit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented graph text format (LF endings):
//   p cub <n> <m>
//   e <u> <v>        exactly m lines, 0 <= u < v < n
// '#'-prefixed comment lines may appear anywhere. Duplicate or out-of-range
// edges are parse errors.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
std::string format_graph(const Graph& g);

// Coloring text format: one line of n characters over {0,1}, vertex i at
// position i, optional trailing newline.
Coloring parse_coloring(std::istream& in);
Coloring parse_coloring_string(const std::string& text);
std::string format_coloring(const Coloring& c);

}  // namespace couponkit
