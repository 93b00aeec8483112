#pragma once

#include <cstdint>

#include "tricolor/graph.hpp"

namespace tricolor {

/// Random simple graph with minimum degree >= delta: delta rounds of random
/// matching overlays, a repair pass topping up deficient vertices, then each
/// remaining non-adjacent pair added independently with probability extra_p.
/// Deterministic per seed. Requires delta < n.
Graph gen_min_degree_random(int n, int delta, double extra_p,
                            std::uint64_t seed);

/// 3-colorable by construction: vertices split into 3 near-equal parts
/// (sizes differ by at most 1), edges only between parts, added randomly
/// until minimum degree >= delta. Requires 3*delta < 2*n.
Graph gen_planted_3colorable(int n, int delta, std::uint64_t seed);

/// Not 3-colorable by construction: a min-degree-delta random graph with a
/// K4 planted on 4 random vertices. Requires n >= 4.
Graph gen_planted_obstruction(int n, int delta, std::uint64_t seed);

}  // namespace tricolor
