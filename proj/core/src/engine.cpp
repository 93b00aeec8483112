#include "tricolor/engine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tricolor/csp32.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/oracle.hpp"
#include "tricolor/polysolve.hpp"

namespace tricolor {

namespace {

void internal_check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

struct Ctx {
  explicit Ctx(const SolverConfig& c) : cfg(c) {}

  const SolverConfig& cfg;
  SolveStats stats;
  bool guarantee = true;
  std::uint64_t limit = UINT64_MAX;

  void tick_engine() {
    ++stats.engine_nodes;
    if (stats.total_nodes() > limit) throw BudgetExhausted();
  }
  std::uint64_t remaining() const {
    std::uint64_t used = stats.total_nodes();
    return used >= limit ? 0 : limit - used;
  }
};

struct NodeResult {
  bool colorable = false;
  std::optional<Coloring> certificate;  // lifted to the input universe
};

NodeResult make_result(Ctx& ctx, const Graph& g,
                       const std::optional<Coloring>& local) {
  NodeResult r;
  r.colorable = local.has_value();
  if (r.colorable && ctx.cfg.want_certificate)
    r.certificate = lift_coloring(g.original_order(), g, *local);
  return r;
}

NodeResult solve_node(Ctx& ctx, const Graph& g, int pivot);

NodeResult base_case(Ctx& ctx, const Graph& h, int v) {
  // v is adjacent to everything else, so the rest must be 2-colorable and
  // v takes the third color.
  std::vector<int> rest;
  rest.reserve(h.order() - 1);
  for (int u : h.live_vertices())
    if (u != v) rest.push_back(u);
  std::vector<int> old_ids;
  Graph others = h.induced(rest, &old_ids);
  std::optional<Coloring> two = two_color(others);
  if (!two) return make_result(ctx, h, std::nullopt);
  Coloring col(h.original_order(), 0);
  col[v] = 3;
  for (std::size_t i = 0; i < old_ids.size(); ++i) col[old_ids[i]] = (*two)[i];
  return make_result(ctx, h, col);
}

NodeResult case1(Ctx& ctx, const Graph& h, int v,
                 const NeighborhoodStructure& s) {
  ++ctx.stats.case1_entries;
  Csp32Instance inst = build_case1_csp(h, v, s);
  CspResult res = solve_csp(inst, &ctx.stats.csp_nodes, ctx.remaining());
  if (!res.sat) return make_result(ctx, h, std::nullopt);
  Coloring col = extend_csp_solution(h, v, s, inst, res.assignment);
  return make_result(ctx, h, col);
}

NodeResult case2(Ctx& ctx, const Graph& h, int v,
                 const NeighborhoodStructure& s) {
  ++ctx.stats.case2_entries;
  std::optional<Coloring> col =
      case2_enumerate(h, v, s, &ctx.stats.case2_enums, ctx.remaining());
  return make_result(ctx, h, col);
}

NodeResult case3(Ctx& ctx, const Graph& h, int v) {
  ++ctx.stats.case3_entries;
  std::vector<char> near(h.original_order(), 0);
  near[v] = 1;
  for (int u : h.neighbors(v)) near[u] = 1;
  for (int u : h.second_neighborhood(v)) near[u] = 1;

  int x = -1;
  for (int u : h.live_vertices())
    if (!near[u] && (x == -1 || h.degree(u) > h.degree(x))) x = u;
  internal_check(x != -1, "case3: no vertex outside N[v] and the second neighborhood");

  if (ctx.cfg.mode != MinDegreeMode::unchecked) {
    int threshold = ctx.cfg.mode == MinDegreeMode::delta7 ? 7 : 8;
    if (h.degree(x) < threshold) ctx.guarantee = false;
  }

  int n = h.order(), d = h.degree(v), dx = h.degree(x);

  // Same color: identify x with the pivot. x is outside the second
  // neighborhood, so it shares no neighbor with v and the pivot degree
  // grows by exactly d(x); n - d(v) drops by d(x) + 1.
  Graph merged = h.contracted(v, x);
  internal_check(merged.degree(v) == d + dx,
                 "case3: pivot degree must grow by d(x) under contraction");
  internal_check(merged.order() - merged.degree(v) == n - d - 1 - dx,
                 "case3: n - d(v) must drop by d(x) + 1 under contraction");
  NodeResult r = solve_node(ctx, merged, v);
  if (r.colorable) return r;

  // Different colors: separate x from the pivot; n - d(v) drops by one.
  Graph separated = h.with_edge(v, x);
  internal_check(separated.degree(v) == d + 1,
                 "case3: pivot degree must grow by 1 under edge addition");
  return solve_node(ctx, separated, v);
}

NodeResult solve_node(Ctx& ctx, const Graph& g, int pivot) {
  ctx.tick_engine();
  if (g.order() <= ctx.cfg.oracle_cutoff)
    return make_result(ctx, g, brute_3color(g));

  ReductionOutcome red = reduce_to_fixpoint(g, pivot);
  ctx.stats.reductions += static_cast<std::uint64_t>(red.steps);
  if (red.not_3_colorable()) return {};

  const Graph& h = *red.graph;
  int n = h.order();
  int d = h.degree(pivot);
  if (d == n - 1) return base_case(ctx, h, pivot);
  if (static_cast<long long>(d) * ctx.cfg.alpha_den >
      static_cast<long long>(ctx.cfg.alpha_num) * n)
    return case1(ctx, h, pivot, red.structure);
  if (1 + d + static_cast<int>(h.second_neighborhood(pivot).size()) == n)
    return case2(ctx, h, pivot, red.structure);
  return case3(ctx, h, pivot);
}

void validate(const Graph& g, const SolverConfig& cfg) {
  if (g.order() < 1) throw std::invalid_argument("graph must have a vertex");
  if (cfg.alpha_num < 1 || cfg.alpha_den < 1 ||
      2 * static_cast<long long>(cfg.alpha_num) >= cfg.alpha_den)
    throw std::invalid_argument("alpha must satisfy 0 < alpha < 1/2");
  if (cfg.oracle_cutoff < 1 || cfg.oracle_cutoff > 20)
    throw std::invalid_argument("oracle_cutoff must be in [1, 20]");
}

SolveReport run(const Graph& g, int pivot, const SolverConfig& cfg) {
  Ctx ctx(cfg);
  if (cfg.node_limit) ctx.limit = *cfg.node_limit;
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&t0] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  NodeResult r;
  try {
    r = solve_node(ctx, g, pivot);
  } catch (const BudgetExhausted&) {
    ctx.stats.elapsed_ms = elapsed_ms();
    throw ResourceLimitError(ctx.stats);
  }

  SolveReport report;
  report.decision = r.colorable ? Decision::COLORABLE : Decision::NOT_COLORABLE;
  report.guarantee_held = ctx.guarantee;
  if (r.colorable && cfg.want_certificate) {
    internal_check(r.certificate && verify_coloring(g, *r.certificate),
                   "certificate failed verification against the input");
    report.certificate = std::move(r.certificate);
  }
  ctx.stats.elapsed_ms = elapsed_ms();
  report.stats = ctx.stats;
  return report;
}

}  // namespace

SolveReport decide_3colorable(const Graph& g, const SolverConfig& cfg) {
  validate(g, cfg);
  int pivot = -1;
  for (int v : g.live_vertices())
    if (pivot == -1 || g.degree(v) > g.degree(pivot)) pivot = v;
  return run(g, pivot, cfg);
}

SolveReport decide_with_pivot(const Graph& g, int pivot,
                              const SolverConfig& cfg) {
  validate(g, cfg);
  if (!g.alive(pivot)) throw std::invalid_argument("pivot is not live");
  return run(g, pivot, cfg);
}

std::optional<Coloring> case2_enumerate(const Graph& g, int v,
                                        const NeighborhoodStructure& s,
                                        std::uint64_t* enums,
                                        std::uint64_t enum_budget) {
  std::vector<int> n2 = g.second_neighborhood(v);
  internal_check(1 + g.degree(v) + static_cast<int>(n2.size()) == g.order(),
                 "case2_enumerate: graph not covered by N[v] and the second "
                 "neighborhood");

  int r = s.pair_count(), t = s.singleton_count();
  internal_check(2 * r + t == g.degree(v),
                 "case2_enumerate: structure does not match N(v)");
  if (r + t > 62)
    throw std::invalid_argument("case2_enumerate: neighborhood too large");

  std::vector<int> old_ids;
  Graph inner = g.induced(n2, &old_ids);

  // For each second-neighborhood vertex, the N(v) side it sees.
  std::vector<char> in_nv(g.original_order(), 0);
  for (int u : g.neighbors(v)) in_nv[u] = 1;
  std::vector<std::vector<int>> nv_neighbors(n2.size());
  for (std::size_t i = 0; i < n2.size(); ++i)
    for (int w : g.neighbors(n2[i]))
      if (in_nv[w]) nv_neighbors[i].push_back(w);

  Coloring ring(g.original_order(), 0);
  std::uint64_t total = 1ull << (r + t);
  std::uint64_t local = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ++local;
    if (enums) ++*enums;
    if (local > enum_budget) throw BudgetExhausted();

    for (int i = 0; i < r; ++i) {
      bool flip = (mask >> i) & 1;
      ring[s.pairs[i].first] = flip ? 3 : 2;
      ring[s.pairs[i].second] = flip ? 2 : 3;
    }
    for (int j = 0; j < t; ++j)
      ring[s.singletons[j]] = ((mask >> (r + j)) & 1) ? 3 : 2;

    // Width <= 2 by construction: every second-neighborhood vertex sees at
    // least one colored neighbor and color 1 is never blocked.
    std::vector<std::vector<int>> lists(n2.size());
    bool dead_end = false;
    for (std::size_t i = 0; i < n2.size() && !dead_end; ++i) {
      std::uint8_t blocked = 0;
      for (int w : nv_neighbors[i]) blocked |= 1u << (ring[w] - 1);
      for (int c = 1; c <= 3; ++c)
        if (!(blocked & (1u << (c - 1)))) lists[i].push_back(c);
      dead_end = lists[i].empty();
    }
    if (dead_end) continue;

    std::optional<Coloring> sol = list_color_width2(inner, ListAssignment(lists));
    if (!sol) continue;

    Coloring full(g.original_order(), 0);
    full[v] = 1;
    for (int u : g.neighbors(v)) full[u] = ring[u];
    for (std::size_t i = 0; i < n2.size(); ++i) full[old_ids[i]] = (*sol)[i];
    return full;
  }
  return std::nullopt;
}

Coloring lift_coloring(int original_n, const Graph& g, const Coloring& c) {
  if (original_n != g.original_order())
    throw std::invalid_argument("lift_coloring: universe size mismatch");
  Coloring out(original_n, 0);
  int painted = 0;
  for (int v : g.live_vertices()) {
    for (int o : g.merge_class(v)) {
      if (o < 0 || o >= original_n || out[o] != 0)
        throw std::logic_error(
            "lift_coloring: merge classes do not partition the originals");
      out[o] = c[v];
      ++painted;
    }
  }
  if (painted != original_n)
    throw std::logic_error(
        "lift_coloring: merge classes do not partition the originals");
  return out;
}

const char* to_string(Decision d) {
  return d == Decision::COLORABLE ? "COLORABLE" : "NOT_COLORABLE";
}

const char* to_string(MinDegreeMode m) {
  switch (m) {
    case MinDegreeMode::delta8: return "delta8";
    case MinDegreeMode::delta7: return "delta7";
    default: return "unchecked";
  }
}

}  // namespace tricolor
