#pragma once

#include <optional>

#include "tricolor/csp32.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

/// Exhaustive backtracking over 3^n assignments with partial-conflict
/// pruning. Ground truth for verification; deliberately simple. Guarded to
/// n <= 20 (throws std::invalid_argument beyond, an oracle that samples is
/// not an oracle).
std::optional<Coloring> brute_3color(const Graph& g);

/// Exhaustive search over the product of the domains. Guarded to 12
/// variables.
CspResult brute_csp(const Csp32Instance& inst);

/// True iff c assigns a color in {1,2,3} to every live vertex of g and no
/// edge is monochromatic. Partial colorings return false.
bool verify_coloring(const Graph& g, const Coloring& c);

}  // namespace tricolor
