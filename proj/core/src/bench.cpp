#include "tricolor/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tricolor/instances.hpp"

namespace tricolor {

namespace {

Graph generate(const BenchParams& p, int n, std::uint64_t seed) {
  switch (p.family) {
    case Family::min_degree_random:
      return gen_min_degree_random(n, p.delta, p.extra_p, seed);
    case Family::planted_3colorable:
      return gen_planted_3colorable(n, p.delta, seed);
    default:
      return gen_planted_obstruction(n, p.delta, seed);
  }
}

void fill_bound(BenchRow& row, MinDegreeMode mode) {
  double coeff = mode == MinDegreeMode::delta7 ? 0.73 : 0.7;
  double base = mode == MinDegreeMode::delta7 ? 1.32 : 1.3158;
  row.bound_exponent = row.n - coeff * row.max_degree;
  row.bound_value = std::pow(base, row.bound_exponent);
}

}  // namespace

std::vector<BenchRow> run_suite(const BenchParams& params) {
  std::vector<int> sizes = params.sizes;
  std::sort(sizes.begin(), sizes.end());

  std::vector<BenchRow> rows;
  for (int n : sizes) {
    for (int k = 0; k < params.seeds_per_size; ++k) {
      std::uint64_t seed = params.seed_base + static_cast<std::uint64_t>(k);
      BenchRow row;
      row.n = n;
      try {
        Graph g = generate(params, n, seed);
        int dmin = n > 0 ? g.order() : 0, dmax = 0;
        for (int v : g.live_vertices()) {
          dmin = std::min(dmin, g.degree(v));
          dmax = std::max(dmax, g.degree(v));
        }
        row.min_degree = dmin;
        row.max_degree = dmax;
        SolveReport rep = decide_3colorable(g, params.cfg);
        row.decision = to_string(rep.decision);
        row.engine_nodes = rep.stats.engine_nodes;
        row.csp_nodes = rep.stats.csp_nodes;
        row.case2_enums = rep.stats.case2_enums;
        row.elapsed_ms = rep.stats.elapsed_ms;
        row.guarantee_held = rep.guarantee_held;
      } catch (const ResourceLimitError& e) {
        row.decision = "ERROR";
        row.error_kind = "node-limit";
        row.engine_nodes = e.partial_stats.engine_nodes;
        row.csp_nodes = e.partial_stats.csp_nodes;
        row.case2_enums = e.partial_stats.case2_enums;
        row.elapsed_ms = e.partial_stats.elapsed_ms;
      } catch (const std::exception& e) {
        row.decision = "ERROR";
        row.error_kind = e.what();
      }
      fill_bound(row, params.cfg.mode);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "n,Delta,delta_min,decision,engine_nodes,csp_nodes,case2_enums,"
      "elapsed_ms,bound_exponent,bound_value,guarantee_held\n";
  char buf[256];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%s,%llu,%llu,%llu,%.3f,%.4f,%.6g,%s\n",
                  r.n, r.max_degree, r.min_degree, r.decision.c_str(),
                  static_cast<unsigned long long>(r.engine_nodes),
                  static_cast<unsigned long long>(r.csp_nodes),
                  static_cast<unsigned long long>(r.case2_enums), r.elapsed_ms,
                  r.bound_exponent, r.bound_value,
                  r.guarantee_held ? "true" : "false");
    out += buf;
  }
  return out;
}

GrowthEstimate estimate_growth_base(const std::vector<BenchRow>& rows) {
  std::vector<std::pair<double, double>> points;  // (exponent, log nodes)
  for (const BenchRow& r : rows) {
    if (r.decision == "ERROR" || r.total_nodes() == 0) continue;
    points.emplace_back(r.bound_exponent,
                        std::log(static_cast<double>(r.total_nodes())));
  }
  double min_x = 0, max_x = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    min_x = i == 0 ? points[i].first : std::min(min_x, points[i].first);
    max_x = i == 0 ? points[i].first : std::max(max_x, points[i].first);
  }
  if (points.size() < 2 || min_x == max_x)
    throw std::invalid_argument(
        "estimate_growth_base: need two distinct exponents with node counts");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double k = static_cast<double>(points.size());
  double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  double intercept = (sy - slope * sx) / k;

  double ss = 0;
  for (auto [x, y] : points) {
    double e = y - (intercept + slope * x);
    ss += e * e;
  }

  GrowthEstimate est;
  est.base = std::exp(slope);
  est.residual = std::sqrt(ss / k);
  est.points = static_cast<int>(points.size());
  return est;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::min_degree_random: return "min-degree";
    case Family::planted_3colorable: return "planted-3col";
    default: return "planted-obstruction";
  }
}

}  // namespace tricolor
