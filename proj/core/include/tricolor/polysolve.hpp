#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tricolor/graph.hpp"

namespace tricolor {

/// Per-vertex color menus of size 1 or 2 inside {1,2,3}. An empty list is an
/// immediate failure witness and is rejected at construction, so callers
/// treat it as "uncolorable" before ever building the assignment.
class ListAssignment {
 public:
  /// lists[v] holds the allowed colors of vertex v; entries for dead
  /// vertices may be empty placeholders only if never queried.
  explicit ListAssignment(const std::vector<std::vector<int>>& lists);

  int size() const { return static_cast<int>(masks_.size()); }
  std::uint8_t mask(int v) const { return masks_[v]; }
  int list_size(int v) const;
  bool contains(int v, int color) const;
  /// Smallest / largest allowed color.
  int lo(int v) const;
  int hi(int v) const;

 private:
  std::vector<std::uint8_t> masks_;
};

/// Proper 2-coloring with colors {1,2} via BFS, or nullopt when the graph
/// has an odd cycle. Linear in n + m; deterministic (components rooted at
/// their lowest id, root colored 1).
std::optional<Coloring> two_color(const Graph& g);

/// Proper list coloring when every list has size <= 2, or nullopt. Each
/// vertex is a binary choice between its list entries (singletons forced);
/// every edge forbids its shared colors, giving a 2-value implication system
/// decided by strong connectivity in linear time. Deterministic witness.
std::optional<Coloring> list_color_width2(const Graph& g,
                                          const ListAssignment& lists);

}  // namespace tricolor
