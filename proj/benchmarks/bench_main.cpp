#include <benchmark/benchmark.h>

#include "tricolor/csp32.hpp"
#include "tricolor/engine.hpp"
#include "tricolor/instances.hpp"
#include "tricolor/polysolve.hpp"
#include "tricolor/reduce.hpp"
#include "tricolor/rng.hpp"

using namespace tricolor;

namespace {

Graph wheel(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % m + 1);
  }
  return Graph::from_edges(m + 1, edges);
}

void BM_DecideMinDegree8(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = gen_min_degree_random(n, 8, 0.0, 42);
  for (auto _ : state) {
    SolveReport rep = decide_3colorable(g);
    benchmark::DoNotOptimize(rep.decision);
    state.counters["nodes"] = static_cast<double>(rep.stats.total_nodes());
  }
}
BENCHMARK(BM_DecideMinDegree8)->Arg(20)->Arg(30)->Arg(40);

void BM_DecidePlanted(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = gen_planted_3colorable(n, 8, 42);
  for (auto _ : state) {
    SolveReport rep = decide_3colorable(g);
    benchmark::DoNotOptimize(rep.decision);
  }
}
BENCHMARK(BM_DecidePlanted)->Arg(30)->Arg(60);

void BM_ReduceWheel(benchmark::State& state) {
  Graph g = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ReductionOutcome out = reduce_to_fixpoint(g, 0);
    benchmark::DoNotOptimize(out.steps);
  }
}
BENCHMARK(BM_ReduceWheel)->Arg(16)->Arg(64)->Arg(256);

void BM_SolveCspRandom(benchmark::State& state) {
  Rng rng(7);
  Csp32Instance inst(static_cast<int>(state.range(0)));
  for (int k = 0; k < 3 * inst.var_count(); ++k) {
    int x = static_cast<int>(rng.below(inst.var_count()));
    int y = static_cast<int>(rng.below(inst.var_count()));
    if (x != y)
      inst.add_nogood(x, 1 + static_cast<int>(rng.below(3)), y,
                      1 + static_cast<int>(rng.below(3)));
  }
  for (auto _ : state) {
    CspResult res = solve_csp(inst);
    benchmark::DoNotOptimize(res.sat);
  }
}
BENCHMARK(BM_SolveCspRandom)->Arg(20)->Arg(40);

void BM_ListColorPath(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  Graph g = Graph::from_edges(n, edges);
  Rng rng(1);
  std::vector<std::vector<int>> lists(n);
  for (int v = 0; v < n; ++v)
    lists[v] = rng.below(2) ? std::vector<int>{1, 2} : std::vector<int>{2, 3};
  ListAssignment la(lists);
  for (auto _ : state) {
    auto got = list_color_width2(g, la);
    benchmark::DoNotOptimize(got.has_value());
  }
}
BENCHMARK(BM_ListColorPath)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
