#pragma once

#include "chromatica/arrangement.hpp"
#include "chromatica/graph.hpp"

#include <istream>
#include <string>

namespace chromatica::io {

// Graph files: a header "n m", then m lines "u v" with 1-indexed vertices.
// Line files: one projective line "a b c" per line. In both, '#' starts a
// comment and blank lines are ignored. Errors are ParseError and name the
// offending line number.

Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph load_graph(const std::string& path);
std::string render_graph(const Graph& g);

ProjLineArrangement parse_lines(std::istream& in);
ProjLineArrangement parse_lines_text(const std::string& text);
ProjLineArrangement load_lines(const std::string& path);
std::string render_lines(const ProjLineArrangement& a);

}  // namespace chromatica::io
