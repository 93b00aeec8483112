#include "tricolor/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tricolor/rng.hpp"

namespace tricolor {

namespace {

struct EdgeSet {
  int n;
  std::vector<char> adj;  // n*n boolean
  std::vector<int> deg;

  explicit EdgeSet(int n_) : n(n_), adj(static_cast<std::size_t>(n_) * n_, 0), deg(n_, 0) {}
  bool has(int a, int b) const { return adj[static_cast<std::size_t>(a) * n + b] != 0; }
  void add(int a, int b) {
    adj[static_cast<std::size_t>(a) * n + b] = adj[static_cast<std::size_t>(b) * n + a] = 1;
    ++deg[a];
    ++deg[b];
  }
  Graph to_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (has(a, b)) edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
  }
};

// Tops up every vertex below `delta`, lowest id first, pairing with a random
// candidate (deficient partners preferred). `allowed(u, w)` filters partners.
template <typename Allowed>
void repair_min_degree(EdgeSet& es, int delta, Rng& rng, Allowed allowed) {
  while (true) {
    int u = -1;
    for (int i = 0; i < es.n; ++i)
      if (es.deg[i] < delta) {
        u = i;
        break;
      }
    if (u == -1) return;
    std::vector<int> candidates, deficient;
    for (int w = 0; w < es.n; ++w) {
      if (w == u || es.has(u, w) || !allowed(u, w)) continue;
      candidates.push_back(w);
      if (es.deg[w] < delta) deficient.push_back(w);
    }
    const std::vector<int>& pool = deficient.empty() ? candidates : deficient;
    if (pool.empty())
      throw std::invalid_argument("infeasible minimum-degree target");
    es.add(u, pool[rng.below(pool.size())]);
  }
}

EdgeSet min_degree_base(int n, int delta, double extra_p, Rng& rng) {
  if (delta >= n) throw std::invalid_argument("delta must be below n");
  if (extra_p < 0.0 || extra_p > 1.0)
    throw std::invalid_argument("extra_p must be a probability");

  EdgeSet es(n);
  // delta rounds of random near-perfect matchings; collisions leave small
  // deficits for the repair pass.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int round = 0; round < delta; ++round) {
    rng.shuffle(perm);
    for (int i = 0; i + 1 < n; i += 2)
      if (!es.has(perm[i], perm[i + 1])) es.add(perm[i], perm[i + 1]);
  }
  repair_min_degree(es, delta, rng, [](int, int) { return true; });

  if (extra_p > 0.0) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!es.has(a, b) && rng.bernoulli(extra_p)) es.add(a, b);
  }
  return es;
}

}  // namespace

Graph gen_min_degree_random(int n, int delta, double extra_p,
                            std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Rng rng(seed);
  return min_degree_base(n, delta, extra_p, rng).to_graph();
}

Graph gen_planted_3colorable(int n, int delta, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (delta < 0 || 3 * static_cast<long long>(delta) >= 2 * static_cast<long long>(n))
    throw std::invalid_argument("need delta < 2n/3 for a tripartite planting");
  Rng rng(seed);
  EdgeSet es(n);
  // part of vertex i is i mod 3; sizes differ by at most one
  repair_min_degree(es, delta, rng,
                    [](int u, int w) { return u % 3 != w % 3; });
  return es.to_graph();
}

Graph gen_planted_obstruction(int n, int delta, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("need at least 4 vertices to plant a K4");
  Rng rng(seed);
  EdgeSet es = min_degree_base(n, delta, 0.0, rng);

  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  rng.shuffle(ids);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!es.has(ids[i], ids[j])) es.add(ids[i], ids[j]);
  return es.to_graph();
}

}  // namespace tricolor
