#include "tricolor/oracle.hpp"

#include <stdexcept>

namespace tricolor {

namespace {

bool brute_3color_rec(const Graph& g, const std::vector<int>& order,
                      std::size_t idx, Coloring& c) {
  if (idx == order.size()) return true;
  int v = order[idx];
  for (int color = 1; color <= 3; ++color) {
    bool clash = false;
    for (int w : g.neighbors(v))
      if (c[w] == color) {
        clash = true;
        break;
      }
    if (clash) continue;
    c[v] = color;
    if (brute_3color_rec(g, order, idx + 1, c)) return true;
    c[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<Coloring> brute_3color(const Graph& g) {
  if (g.order() > 20)
    throw std::invalid_argument("brute_3color: guarded to 20 vertices");
  std::vector<int> order = g.live_vertices();
  Coloring c(g.original_order(), 0);
  if (brute_3color_rec(g, order, 0, c)) return c;
  return std::nullopt;
}

CspResult brute_csp(const Csp32Instance& inst) {
  int n = inst.var_count();
  if (n > 12) throw std::invalid_argument("brute_csp: guarded to 12 variables");

  std::vector<std::vector<int>> domains(n);
  for (int i = 0; i < n; ++i) domains[i] = inst.domain_values(i);

  std::vector<int> pick(n, 0);  // index into each domain
  while (true) {
    bool ok = true;
    for (const Nogood& ng : inst.nogoods())
      if (domains[ng.x][pick[ng.x]] == ng.a && domains[ng.y][pick[ng.y]] == ng.b) {
        ok = false;
        break;
      }
    if (ok) {
      CspResult r;
      r.sat = true;
      r.assignment.resize(n);
      for (int i = 0; i < n; ++i) r.assignment[i] = domains[i][pick[i]];
      return r;
    }
    // next point in the domain product, last variable fastest
    int i = n - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(domains[i].size())) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) return {};
    ++pick[i];
  }
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) < g.original_order()) return false;
  for (int v : g.live_vertices()) {
    if (c[v] < 1 || c[v] > 3) return false;
    for (int w : g.neighbors(v))
      if (w > v && c[w] == c[v]) return false;
  }
  return true;
}

}  // namespace tricolor
