#include "tricolor/dimacs.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "tricolor/errors.hpp"

namespace tricolor {

namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  long long edges_seen = 0;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line) || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      std::string fmt;
      std::string rest;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0 || (ls >> rest))
        throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 22)));
    } else if (tag == "e") {
      if (!have_header) throw ParseError(lineno, "edge line before header");
      int u = 0, v = 0;
      std::string rest;
      if (!(ls >> u >> v) || (ls >> rest))
        throw ParseError(lineno, "malformed edge line, expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "vertex index out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      ++edges_seen;
      if (edges_seen > m)
        throw ParseError(lineno, "edge count mismatch: more edge lines than the header declares");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(lineno, "unrecognized line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (edges_seen != m)
    throw ParseError(lineno, "edge count mismatch: header declares " +
                                 std::to_string(m) + " edges, found " +
                                 std::to_string(edges_seen));
  return Graph::from_edges(n, edges);
}

std::string write_dimacs(const Graph& g) {
  std::vector<int> live = g.live_vertices();
  std::vector<int> relabel(g.original_order(), 0);
  for (std::size_t i = 0; i < live.size(); ++i)
    relabel[live[i]] = static_cast<int>(i) + 1;

  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (int v : live)
    for (int w : g.neighbors(v))
      if (v < w) out << "e " << relabel[v] << ' ' << relabel[w] << '\n';
  return out.str();
}

}  // namespace tricolor
