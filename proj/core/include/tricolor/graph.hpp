#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tricolor {

/// Vertex colors are 1..3; 0 marks "unassigned". Indexed by vertex id.
using Coloring = std::vector<int>;

/// Simple undirected graph over a fixed id universe 0..original_order()-1.
///
/// Vertices die through contraction but ids are never reused, so data keyed
/// by vertex id stays valid across derived graphs. Every live vertex carries
/// the set of original-input vertices merged into it (its merge class); the
/// merge classes of the live vertices always partition the original universe,
/// which is what lets a coloring of a derived graph lift back to the input.
///
/// Values are immutable once built: contracted() and with_edge() return new
/// graphs. Safe to share read-only across threads.
class Graph {
 public:
  /// n isolated vertices, merge class of i is {i}.
  explicit Graph(int n);

  /// Builds a simple graph; duplicate edges collapse, self-loops are rejected.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return live_count_; }
  int original_order() const { return original_n_; }
  int edge_count() const { return edge_count_; }

  bool alive(int v) const { return v >= 0 && v < original_n_ && alive_[v]; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  /// Sorted ascending.
  const std::vector<int>& neighbors(int v) const;
  /// Live vertex ids, ascending.
  std::vector<int> live_vertices() const;
  /// Original-input ids merged into v, sorted ascending.
  const std::vector<int>& merge_class(int v) const;

  /// Identifies `drop` into `keep` (which survives with the same id) and
  /// collapses any parallel edges so the result stays simple. The vertices
  /// may be adjacent or not.
  Graph contracted(int keep, int drop) const;

  /// Adds the absent edge ab.
  Graph with_edge(int a, int b) const;

  /// Vertices at distance exactly 2 from v, sorted. Disjoint from N[v].
  std::vector<int> second_neighborhood(int v) const;

  /// Fresh graph on the given live vertices, relabeled 0..k-1 in the order
  /// given. If old_ids is non-null it receives the new->old id map.
  Graph induced(const std::vector<int>& verts, std::vector<int>* old_ids) const;

  /// Exact structural equality: same universe, live set, adjacency and
  /// merge classes.
  bool operator==(const Graph& other) const;

  /// Throws std::logic_error if a representation invariant is broken
  /// (asymmetry, self-loop, merge classes not partitioning the universe).
  void check_invariants() const;

 private:
  int original_n_ = 0;
  int live_count_ = 0;
  int edge_count_ = 0;
  std::vector<char> alive_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> merge_;

  void require_live(int v, const char* who) const;
};

}  // namespace tricolor
