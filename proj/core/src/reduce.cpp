#include "tricolor/reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricolor {

namespace {

// Lowest-id vertex of N(v) with at least two neighbors inside N(v), plus its
// two lowest such neighbors. Returns false when R1 does not apply.
bool find_r1(const Graph& g, int v, int& u1, int& u3) {
  const std::vector<int>& nv = g.neighbors(v);
  for (int u2 : nv) {
    int first = -1;
    for (int w : g.neighbors(u2)) {
      if (w == v || !g.has_edge(v, w)) continue;
      if (first == -1) {
        first = w;
      } else {
        u1 = first;
        u3 = w;
        return true;
      }
    }
  }
  return false;
}

// Lowest pair (by lower endpoint) with a common neighbor outside N[v], and
// the lowest such neighbor. After R1 is exhausted any common neighbor other
// than v lies at distance exactly 2 from v.
bool find_r2(const Graph& g, int v, int& y) {
  const std::vector<int>& nv = g.neighbors(v);
  for (int u : nv) {
    for (int w : g.neighbors(u)) {
      if (w <= u || w == v || !g.has_edge(v, w)) continue;
      // u,w is a matched pair (u < w)
      for (int cand : g.neighbors(u)) {
        if (cand == v || cand == w) continue;
        if (g.has_edge(v, cand)) continue;  // would be an R1 witness
        if (g.has_edge(w, cand)) {
          y = cand;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

ReductionOutcome reduce_to_fixpoint(const Graph& g, int v) {
  ReductionOutcome out;
  out.pivot = v;
  Graph h = g;
  while (true) {
    int u1, u3, y;
    if (find_r1(h, v, u1, u3)) {
      if (h.has_edge(u1, u3)) return out;  // K4 through the pivot
      h = h.contracted(u1, u3);
      ++out.steps;
    } else if (find_r2(h, v, y)) {
      h = h.contracted(v, y);
      ++out.steps;
    } else {
      break;
    }
  }
  out.structure = analyze_neighborhood(h, v);
  out.graph = std::move(h);
  return out;
}

NeighborhoodStructure analyze_neighborhood(const Graph& g, int v) {
  NeighborhoodStructure s;
  for (int u : g.neighbors(v)) {
    int mate = -1;
    for (int w : g.neighbors(u)) {
      if (w == v || !g.has_edge(v, w)) continue;
      if (mate != -1)
        throw std::logic_error(
            "analyze_neighborhood: vertex with two neighbors inside N(v), "
            "reduction missed");
      mate = w;
    }
    if (mate == -1)
      s.singletons.push_back(u);
    else if (u < mate)
      s.pairs.emplace_back(u, mate);
  }
  return s;
}

}  // namespace tricolor
