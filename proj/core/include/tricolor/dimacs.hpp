#pragma once

#include <string>

#include "tricolor/graph.hpp"

namespace tricolor {

/// Parses DIMACS edge format: header `p edge <n> <m>`, edge lines `e <u> <v>`
/// with 1-based endpoints, comment lines `c ...`. Duplicate edge lines
/// collapse; the header edge count must match the number of e-lines.
/// Throws ParseError naming the offending line.
Graph parse_dimacs(const std::string& text);

/// Emits DIMACS edge format. Live vertices are relabeled 1..n in ascending
/// id order; edges are written smaller endpoint first, sorted.
std::string write_dimacs(const Graph& g);

}  // namespace tricolor
