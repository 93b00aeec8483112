#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricolor/engine.hpp"

namespace tricolor {

enum class Family { min_degree_random, planted_3colorable, planted_obstruction };

struct BenchParams {
  Family family = Family::min_degree_random;
  int delta = 8;
  double extra_p = 0.0;
  std::vector<int> sizes;
  int seeds_per_size = 1;
  std::uint64_t seed_base = 1;
  SolverConfig cfg;
};

/// One measured run. bound_exponent is n - 0.7*Delta (n - 0.73*Delta in
/// delta7 mode) and bound_value the matching power of 1.3158 (1.32).
struct BenchRow {
  int n = 0;
  int max_degree = 0;
  int min_degree = 0;
  /// COLORABLE / NOT_COLORABLE, or ERROR when the run failed; the error kind
  /// is carried alongside for diagnostics.
  std::string decision;
  std::string error_kind;
  std::uint64_t engine_nodes = 0;
  std::uint64_t csp_nodes = 0;
  std::uint64_t case2_enums = 0;
  double elapsed_ms = 0.0;
  double bound_exponent = 0.0;
  double bound_value = 0.0;
  bool guarantee_held = false;

  std::uint64_t total_nodes() const {
    return engine_nodes + csp_nodes + case2_enums;
  }
};

/// One row per (size, seed), sizes ascending, seeds seed_base..+count-1.
/// Generator or solver failures mark the row rather than aborting the suite.
std::vector<BenchRow> run_suite(const BenchParams& params);

/// Fixed csv layout:
/// n,Delta,delta_min,decision,engine_nodes,csp_nodes,case2_enums,elapsed_ms,
/// bound_exponent,bound_value,guarantee_held
std::string to_csv(const std::vector<BenchRow>& rows);

struct GrowthEstimate {
  /// exp(slope) of the least-squares fit of log(total nodes) against
  /// bound_exponent.
  double base = 0.0;
  /// Root-mean-square residual of the fit, in log space.
  double residual = 0.0;
  int points = 0;
};

/// Requires at least two distinct bound_exponent values among non-error rows
/// (throws std::invalid_argument otherwise). Invariant under scaling all
/// node counts by a positive constant.
GrowthEstimate estimate_growth_base(const std::vector<BenchRow>& rows);

const char* to_string(Family f);

}  // namespace tricolor
