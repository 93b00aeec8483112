#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tricolor/graph.hpp"

namespace tricolor {

/// Decomposition of N(v) once the induced subgraph on N(v) has maximum
/// degree <= 1: matched pairs (edges inside N(v)) and singletons (the rest).
struct NeighborhoodStructure {
  /// (u,w) with u < w and uw an edge, sorted by u.
  std::vector<std::pair<int, int>> pairs;
  /// Ascending.
  std::vector<int> singletons;

  int pair_count() const { return static_cast<int>(pairs.size()); }
  int singleton_count() const { return static_cast<int>(singletons.size()); }
};

/// Result of running the pivot reductions to a fixpoint. A disengaged graph
/// means the input is not 3-colorable (a K4 through the pivot surfaced);
/// otherwise the reduced graph is 3-colorable iff the input was, and the
/// pivot is live in it.
struct ReductionOutcome {
  std::optional<Graph> graph;
  int pivot = -1;
  NeighborhoodStructure structure;
  /// Contractions applied; each reduces the order by one.
  int steps = 0;

  bool not_3_colorable() const { return !graph.has_value(); }
};

/// Applies, until neither fires, with the lowest-id witness first:
///   R1: u2 in N(v) with two neighbors u1,u3 in N(v) -- if u1u3 is an edge
///       the input is not 3-colorable, else u1 and u3 are forced to share a
///       color and are contracted (u1 survives);
///   R2: a matched pair with a common neighbor y outside N[v] -- y is forced
///       to the pivot's color and is contracted into v.
/// R1 is exhausted before R2 is tried, rescanning after every contraction.
ReductionOutcome reduce_to_fixpoint(const Graph& g, int v);

/// Exact partition of N(v) into matched pairs and singletons. Requires the
/// reduction fixpoint: a vertex of N(v) with two neighbors in N(v) signals a
/// missed reduction and throws std::logic_error.
NeighborhoodStructure analyze_neighborhood(const Graph& g, int v);

}  // namespace tricolor
