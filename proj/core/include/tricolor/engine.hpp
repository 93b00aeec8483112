#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "tricolor/graph.hpp"
#include "tricolor/reduce.hpp"

namespace tricolor {

/// Which minimum-degree hypothesis the run is tracked against. The decision
/// is correct in every mode; the mode only governs the guarantee flag and the
/// growth-bound constants reported by the bench tooling.
enum class MinDegreeMode { delta8, delta7, unchecked };

struct SolverConfig {
  MinDegreeMode mode = MinDegreeMode::delta8;
  /// Dense-pivot dispatch threshold as an exact rational alpha_num/alpha_den,
  /// compared as d(v) * alpha_den > alpha_num * n. Must satisfy 0 < alpha < 1/2.
  int alpha_num = 309;
  int alpha_den = 1000;
  /// Subproblems at or below this order go straight to the exhaustive oracle.
  int oracle_cutoff = 8;
  bool want_certificate = false;
  /// Cap on engine nodes + CSP nodes + enumerated assignments.
  std::optional<std::uint64_t> node_limit;
};

enum class Decision { COLORABLE, NOT_COLORABLE };

struct SolveStats {
  std::uint64_t engine_nodes = 0;
  std::uint64_t csp_nodes = 0;
  std::uint64_t case2_enums = 0;
  std::uint64_t reductions = 0;
  std::uint64_t case1_entries = 0;
  std::uint64_t case2_entries = 0;
  std::uint64_t case3_entries = 0;
  double elapsed_ms = 0.0;

  std::uint64_t total_nodes() const {
    return engine_nodes + csp_nodes + case2_enums;
  }
};

struct SolveReport {
  Decision decision = Decision::NOT_COLORABLE;
  /// Lifted to the original input graph; present when requested and
  /// decision is COLORABLE.
  std::optional<Coloring> certificate;
  SolveStats stats;
  /// True iff every branching step picked a vertex meeting the mode's degree
  /// threshold (8 or 7). Vacuously true with no branching, and always true
  /// in unchecked mode, where no hypothesis is claimed.
  bool guarantee_held = true;
};

/// Thrown when SolverConfig::node_limit is exceeded; carries the stats
/// gathered up to that point.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(SolveStats partial)
      : std::runtime_error("node limit exceeded"), partial_stats(partial) {}
  SolveStats partial_stats;
};

/// Decides 3-colorability exactly for any simple graph with n >= 1. The
/// pivot is a maximum-degree vertex (lowest id on ties) and stays fixed
/// through branching; it is re-reduced at every node. Correctness never
/// depends on the degree hypothesis, only guarantee_held does.
SolveReport decide_3colorable(const Graph& g, const SolverConfig& cfg = {});

/// Same procedure with a caller-chosen pivot; pivot must be live.
SolveReport decide_with_pivot(const Graph& g, int pivot,
                              const SolverConfig& cfg = {});

/// Tries the 2^(r+t) proper {2,3}-assignments of N(v) (each matched pair in
/// both orientations, each singleton free) and extends each through width-2
/// list coloring of the rest; first full proper coloring wins. Requires the
/// reduction fixpoint and that every vertex outside N[v] has a neighbor in
/// N(v). `enums` counts the assignments tried; exceeding `enum_budget`
/// throws BudgetExhausted.
std::optional<Coloring> case2_enumerate(const Graph& g, int v,
                                        const NeighborhoodStructure& s,
                                        std::uint64_t* enums = nullptr,
                                        std::uint64_t enum_budget = UINT64_MAX);

/// Paints every original vertex with its merge class's color. c must be
/// proper on g; the result is defined on all original_n vertices.
Coloring lift_coloring(int original_n, const Graph& g, const Coloring& c);

const char* to_string(Decision d);
const char* to_string(MinDegreeMode m);

}  // namespace tricolor
