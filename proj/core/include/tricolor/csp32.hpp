#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricolor/graph.hpp"
#include "tricolor/reduce.hpp"

namespace tricolor {

/// One forbidden value pair: the assignment x=a AND y=b is disallowed.
/// Stored canonically with x < y.
struct Nogood {
  int x, a, y, b;
  friend bool operator==(const Nogood&, const Nogood&) = default;
  friend auto operator<=>(const Nogood&, const Nogood&) = default;
};

/// Binary CSP over variables with domains inside {1,2,3} and pairwise
/// forbidden value combinations. Domains are bitmasks (bit c-1 <-> color c).
/// Instances are immutable while being solved; building is sequential.
class Csp32Instance {
 public:
  explicit Csp32Instance(int nvars);

  int var_count() const { return static_cast<int>(domains_.size()); }

  /// Domain as a bitmask; every domain is a nonempty subset of {1,2,3}.
  std::uint8_t domain_mask(int var) const;
  std::vector<int> domain_values(int var) const;

  /// Restricts var's domain. Throws std::invalid_argument on an empty or
  /// out-of-range result: an instance never holds an empty domain.
  void set_domain(int var, const std::vector<int>& values);

  /// Adds the nogood ((x,a),(y,b)); orientation is canonicalized and
  /// duplicates collapse. x and y must be distinct live variables, values
  /// in 1..3.
  void add_nogood(int x, int a, int y, int b);

  /// Sorted, duplicate-free.
  const std::vector<Nogood>& nogoods() const { return nogoods_; }

  /// Optional map var -> vertex id, populated by the encoder so solutions
  /// can be pushed back onto the graph. Empty when unset.
  const std::vector<int>& origin_map() const { return origin_; }
  void set_origin_map(std::vector<int> origin);

 private:
  std::vector<std::uint8_t> domains_;
  std::vector<Nogood> nogoods_;
  std::vector<int> origin_;
};

struct CspResult {
  bool sat = false;
  /// var -> value, sized var_count; empty when unsat.
  std::vector<int> assignment;
};

/// Branch-and-reduce decision procedure: propagates singleton domains into
/// nogood-implied deletions to a fixpoint, assigns constraint-free variables
/// greedily, and branches on a minimum-domain variable (ties: maximum count
/// of active nogoods, then lowest id), trying values in ascending order.
/// Deterministic for a fixed instance.
///
/// If `nodes` is non-null it is incremented in place once per search node;
/// when the count would exceed `node_budget` the solver throws
/// BudgetExhausted.
CspResult solve_csp(const Csp32Instance& inst, std::uint64_t* nodes = nullptr,
                    std::uint64_t node_budget = UINT64_MAX);

/// Encodes 3-colorability of g as a binary CSP on H = V(g) \ N[v], given the
/// matched-pair/singleton decomposition of N(v) after reductions. The pivot's
/// color is fixed to 1 by convention, so N(v) is confined to {2,3}; the
/// instance is solvable iff g is 3-colorable. Requires the reduction
/// fixpoint (throws std::logic_error when a missed reduction surfaces).
Csp32Instance build_case1_csp(const Graph& g, int v,
                              const NeighborhoodStructure& s);

/// Deterministically extends a satisfying assignment of build_case1_csp's
/// instance to a proper 3-coloring of g: v gets 1, each singleton the
/// smallest free color in {2,3}, each matched pair the orientation of {2,3}
/// consistent with both sides. Failure to extend signals an encoder bug and
/// throws std::logic_error.
Coloring extend_csp_solution(const Graph& g, int v,
                             const NeighborhoodStructure& s,
                             const Csp32Instance& inst,
                             const std::vector<int>& assignment);

/// Text form used by the CLI: header `csp32 <nvars>`, optional domain lines
/// `d <var> <values...>`, nogood lines `f <x> <a> <y> <b>`, comments `c ...`.
/// Variables are 1-based. Throws ParseError naming the line.
Csp32Instance parse_csp32(const std::string& text);
std::string write_csp32(const Csp32Instance& inst);

}  // namespace tricolor
