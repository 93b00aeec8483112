#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "testutil.hpp"
#include "tricolor/engine.hpp"
#include "tricolor/oracle.hpp"
#include "tricolor/reduce.hpp"
#include "tricolor/rng.hpp"

using namespace tricolor;

namespace {

SolverConfig exercised() {
  SolverConfig cfg;
  cfg.mode = MinDegreeMode::unchecked;
  cfg.oracle_cutoff = 1;  // keep the oracle out of the way
  return cfg;
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

}  // namespace

TEST_CASE("named instances decide correctly") {
  CHECK(decide_3colorable(testutil::complete(4), exercised()).decision ==
        Decision::NOT_COLORABLE);

  // K_{3,3}
  std::vector<std::pair<int, int>> kk;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) kk.emplace_back(i, j);
  Graph k33 = Graph::from_edges(6, kk);
  SolverConfig cfg = exercised();
  cfg.want_certificate = true;
  SolveReport rep = decide_3colorable(k33, cfg);
  CHECK(rep.decision == Decision::COLORABLE);
  REQUIRE(rep.certificate);
  CHECK(verify_coloring(k33, *rep.certificate));

  // under the default config the bipartite witness uses two colors
  SolverConfig dflt;
  dflt.want_certificate = true;
  SolveReport rep2 = decide_3colorable(k33, dflt);
  REQUIRE(rep2.certificate);
  for (int c : *rep2.certificate) CHECK(c <= 2);

  CHECK(brute_3color(petersen()).has_value());
  CHECK(decide_3colorable(petersen(), exercised()).decision ==
        Decision::COLORABLE);

  CHECK(!brute_3color(testutil::wheel(7)));
  CHECK(decide_3colorable(testutil::wheel(7), exercised()).decision ==
        Decision::NOT_COLORABLE);
}

TEST_CASE("decision matches the oracle exhaustively up to 5 vertices") {
  SolverConfig cfg = exercised();
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t masks = 1ull << testutil::pair_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      Graph g = testutil::graph_from_mask(n, mask);
      bool expect = brute_3color(g).has_value();
      CHECK(decide_3colorable(g, cfg).decision ==
            (expect ? Decision::COLORABLE : Decision::NOT_COLORABLE));
    }
  }
}

TEST_CASE("decision matches the oracle on random mid-size graphs") {
  Rng rng(31415);
  SolverConfig cfg = exercised();
  cfg.want_certificate = true;
  for (int iter = 0; iter < 300; ++iter) {
    int n = 8 + static_cast<int>(rng.below(4));
    double p = 0.2 + 0.2 * static_cast<double>(rng.below(4));
    Graph g = testutil::random_graph(n, p, rng);
    SolveReport rep = decide_3colorable(g, cfg);
    CHECK((rep.decision == Decision::COLORABLE) ==
          brute_3color(g).has_value());
    if (rep.decision == Decision::COLORABLE) {
      REQUIRE(rep.certificate);
      CHECK(verify_coloring(g, *rep.certificate));
    }
  }
}

TEST_CASE("identical input and config give identical reports") {
  Rng rng(777);
  SolverConfig cfg = exercised();
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = testutil::random_graph(10, 0.4, rng);
    SolveReport a = decide_3colorable(g, cfg);
    SolveReport b = decide_3colorable(g, cfg);
    CHECK(a.decision == b.decision);
    CHECK(a.guarantee_held == b.guarantee_held);
    CHECK(a.stats.engine_nodes == b.stats.engine_nodes);
    CHECK(a.stats.csp_nodes == b.stats.csp_nodes);
    CHECK(a.stats.case2_enums == b.stats.case2_enums);
    CHECK(a.stats.reductions == b.stats.reductions);
    CHECK(a.stats.case1_entries == b.stats.case1_entries);
    CHECK(a.stats.case2_entries == b.stats.case2_entries);
    CHECK(a.stats.case3_entries == b.stats.case3_entries);
  }
}

TEST_CASE("wheels are settled by reductions and the degree-n-1 base case") {
  SolverConfig cfg = exercised();
  for (int k = 2; k <= 6; ++k) {
    SolveReport odd = decide_3colorable(testutil::wheel(2 * k + 1), cfg);
    CHECK(odd.decision == Decision::NOT_COLORABLE);
    CHECK(odd.stats.case3_entries == 0);

    SolveReport even = decide_3colorable(testutil::wheel(2 * k), cfg);
    CHECK(even.decision == Decision::COLORABLE);
    CHECK(even.stats.case3_entries == 0);
  }
}

TEST_CASE("case2_enumerate colors the double-star with private leaves") {
  // 0 adjacent to 1,2 (independent); 1 and 2 each carry three private leaves
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 3}, {1, 4},
                                            {1, 5}, {2, 6}, {2, 7}, {2, 8}};
  Graph g = Graph::from_edges(9, edges);
  NeighborhoodStructure s = analyze_neighborhood(g, 0);
  CHECK(s.singleton_count() == 2);

  std::uint64_t enums = 0;
  auto col = case2_enumerate(g, 0, s, &enums);
  REQUIRE(col);
  CHECK(verify_coloring(g, *col));
  CHECK(enums <= 4);

  // one leaf adjacent to both branch vertices still works; under any
  // assignment where 1 and 2 differ it is pinned to color 1
  Graph g2 = Graph::from_edges(9, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5},
                                   {2, 6}, {2, 7}, {2, 8}, {2, 3}});
  NeighborhoodStructure s2 = analyze_neighborhood(g2, 0);
  auto col2 = case2_enumerate(g2, 0, s2);
  REQUIRE(col2);
  CHECK(verify_coloring(g2, *col2));
  CHECK(brute_3color(g2).has_value());
}

TEST_CASE("case2_enumerate matches the oracle when the cover holds") {
  Rng rng(606);
  int covered_cases = 0;
  for (int iter = 0; iter < 1500 && covered_cases < 200; ++iter) {
    int n = 6 + static_cast<int>(rng.below(4));
    Graph g = testutil::random_graph(n, 0.25, rng);
    int pivot = 0;
    for (int v = 1; v < n; ++v)
      if (g.degree(v) > g.degree(pivot)) pivot = v;
    ReductionOutcome out = reduce_to_fixpoint(g, pivot);
    if (out.not_3_colorable()) continue;
    const Graph& h = *out.graph;
    int nn = h.order(), d = h.degree(pivot);
    if (d == nn - 1) continue;
    if (1 + d + static_cast<int>(h.second_neighborhood(pivot).size()) != nn)
      continue;
    ++covered_cases;
    auto col = case2_enumerate(h, pivot, out.structure);
    CHECK(col.has_value() == brute_3color(h).has_value());
    if (col) CHECK(verify_coloring(h, *col));
  }
  CHECK(covered_cases >= 200);
}

TEST_CASE("two bridged triangles drive the branching path") {
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4},
                                            {3, 5}, {4, 5}, {0, 3}};
  Graph g = Graph::from_edges(6, edges);
  SolverConfig cfg = exercised();
  cfg.alpha_num = 2;  // alpha = 2/5 keeps the sparse pivot out of the CSP arm
  cfg.alpha_den = 5;
  SolveReport rep = decide_with_pivot(g, 1, cfg);
  CHECK(rep.decision == Decision::COLORABLE);
  CHECK(rep.stats.case3_entries >= 1);
  CHECK(brute_3color(g).has_value());
}

TEST_CASE("branching clears the guarantee flag on low-degree picks") {
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4},
                                            {3, 5}, {4, 5}, {0, 3}};
  Graph g = Graph::from_edges(6, edges);
  SolverConfig cfg;
  cfg.mode = MinDegreeMode::delta8;
  cfg.oracle_cutoff = 1;
  cfg.alpha_num = 2;
  cfg.alpha_den = 5;
  SolveReport rep = decide_with_pivot(g, 1, cfg);
  CHECK(rep.stats.case3_entries >= 1);
  CHECK(!rep.guarantee_held);  // every vertex here has degree < 8

  cfg.mode = MinDegreeMode::unchecked;
  CHECK(decide_with_pivot(g, 1, cfg).guarantee_held);
}

TEST_CASE("delta7 mode accepts a degree-7 branch vertex that delta8 rejects") {
  // pivot 0 - 1 - 2 - 3, with 3 carrying six extra leaves: the only vertex
  // outside N[0] and the second neighborhood with maximum degree is 3, at
  // degree exactly 7
  std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}};
  for (int leaf = 4; leaf < 10; ++leaf) edges.emplace_back(3, leaf);
  Graph g = Graph::from_edges(10, edges);
  REQUIRE(g.degree(3) == 7);

  SolverConfig cfg;
  cfg.oracle_cutoff = 1;
  cfg.mode = MinDegreeMode::delta8;
  SolveReport r8 = decide_with_pivot(g, 0, cfg);
  CHECK(r8.decision == Decision::COLORABLE);
  CHECK(r8.stats.case3_entries >= 1);
  CHECK(!r8.guarantee_held);

  cfg.mode = MinDegreeMode::delta7;
  SolveReport r7 = decide_with_pivot(g, 0, cfg);
  CHECK(r7.decision == Decision::COLORABLE);
  CHECK(r7.guarantee_held);
}

TEST_CASE("node limit raises a resource error with partial stats") {
  // triangle-free and sparse, so the root node cannot settle it alone
  Graph g = petersen();
  SolverConfig cfg = exercised();
  cfg.node_limit = 1;
  try {
    decide_3colorable(g, cfg);
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(e.partial_stats.total_nodes() >= 1);
  }
  cfg.node_limit = std::nullopt;
  CHECK(decide_3colorable(g, cfg).decision == Decision::COLORABLE);
}

TEST_CASE("config validation") {
  Graph g = testutil::complete(3);
  SolverConfig bad;
  bad.alpha_num = 1;
  bad.alpha_den = 2;  // alpha must be < 1/2
  CHECK_THROWS_AS(decide_3colorable(g, bad), std::invalid_argument);
  bad = SolverConfig{};
  bad.oracle_cutoff = 0;
  CHECK_THROWS_AS(decide_3colorable(g, bad), std::invalid_argument);
  CHECK_THROWS_AS(decide_3colorable(Graph(0)), std::invalid_argument);
  CHECK_THROWS_AS(decide_with_pivot(g, 9), std::invalid_argument);
}

TEST_CASE("lift_coloring paints merge classes") {
  Graph g = testutil::cycle(4);
  Coloring c = {1, 2, 1, 2};
  CHECK(lift_coloring(4, g, c) == c);  // no contractions: identity

  Graph h = g.contracted(0, 2);
  Coloring ch(4, 0);
  ch[0] = 1;
  ch[1] = 2;
  ch[3] = 3;
  Coloring lifted = lift_coloring(4, h, ch);
  CHECK(lifted == Coloring{1, 2, 1, 3});
  CHECK(lifted[0] == lifted[2]);
  CHECK(verify_coloring(g, lifted));
}

TEST_CASE("certificates survive lifting end to end") {
  Rng rng(123321);
  SolverConfig cfg = exercised();
  cfg.want_certificate = true;
  int colorable_seen = 0;
  for (int iter = 0; iter < 200; ++iter) {
    int n = 7 + static_cast<int>(rng.below(5));
    Graph g = testutil::random_graph(n, 0.3, rng);
    SolveReport rep = decide_3colorable(g, cfg);
    if (rep.decision != Decision::COLORABLE) continue;
    ++colorable_seen;
    REQUIRE(rep.certificate);
    CHECK(verify_coloring(g, *rep.certificate));
  }
  CHECK(colorable_seen > 100);
}

TEST_CASE("decision is pivot-independent on all small graphs") {
  SolverConfig cfg = exercised();
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t masks = 1ull << testutil::pair_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      Graph g = testutil::graph_from_mask(n, mask);
      bool expect = brute_3color(g).has_value();
      for (int v = 0; v < n; ++v)
        CHECK((decide_with_pivot(g, v, cfg).decision == Decision::COLORABLE) ==
              expect);
    }
  }
}

TEST_CASE("concurrent solves on independent inputs match serial runs") {
  Rng rng(1618);
  std::vector<Graph> graphs;
  for (int i = 0; i < 16; ++i)
    graphs.push_back(testutil::random_graph(11, 0.35, rng));

  SolverConfig cfg = exercised();
  std::vector<SolveReport> serial;
  for (const Graph& g : graphs) serial.push_back(decide_3colorable(g, cfg));

  std::vector<SolveReport> parallel(graphs.size());
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < graphs.size(); i += 4)
        parallel[i] = decide_3colorable(graphs[i], cfg);
    });
  for (std::thread& w : workers) w.join();

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CHECK(parallel[i].decision == serial[i].decision);
    CHECK(parallel[i].stats.engine_nodes == serial[i].stats.engine_nodes);
    CHECK(parallel[i].stats.csp_nodes == serial[i].stats.csp_nodes);
  }
}
