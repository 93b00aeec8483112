#include "tricolor/polysolve.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace tricolor {

namespace {

constexpr std::uint8_t color_bit(int c) {
  return static_cast<std::uint8_t>(1u << (c - 1));
}

}  // namespace

ListAssignment::ListAssignment(const std::vector<std::vector<int>>& lists) {
  masks_.reserve(lists.size());
  for (const auto& list : lists) {
    std::uint8_t m = 0;
    for (int c : list) {
      if (c < 1 || c > 3)
        throw std::invalid_argument("list color outside {1,2,3}");
      m |= color_bit(c);
    }
    if (m == 0) throw std::invalid_argument("empty color list");
    if (std::popcount(static_cast<unsigned>(m)) > 2)
      throw std::invalid_argument("color list wider than 2");
    masks_.push_back(m);
  }
}

int ListAssignment::list_size(int v) const {
  return std::popcount(static_cast<unsigned>(masks_[v]));
}

bool ListAssignment::contains(int v, int color) const {
  return (masks_[v] & color_bit(color)) != 0;
}

int ListAssignment::lo(int v) const {
  return std::countr_zero(static_cast<unsigned>(masks_[v])) + 1;
}

int ListAssignment::hi(int v) const {
  return 8 - std::countl_zero(static_cast<unsigned>(masks_[v]) << 24);
}

std::optional<Coloring> two_color(const Graph& g) {
  Coloring c(g.original_order(), 0);
  std::queue<int> q;
  for (int root : g.live_vertices()) {
    if (c[root] != 0) continue;
    c[root] = 1;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (c[w] == 0) {
          c[w] = 3 - c[v];
          q.push(w);
        } else if (c[w] == c[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return c;
}

namespace {

// Two literals per binary vertex: lit 2k chooses the low list color, 2k+1
// the high one. Implications are stored as a flat CSR-style graph so the
// SCC pass stays allocation-light at path-length scale.
class TwoSat {
 public:
  explicit TwoSat(int vars) : n_(2 * vars) {}

  void forbid_both(int lit_a, int lit_b) {
    // (!A or !B): A -> !B, B -> !A
    edges_.emplace_back(lit_a, lit_b ^ 1);
    edges_.emplace_back(lit_b, lit_a ^ 1);
  }

  void force(int lit) { edges_.emplace_back(lit ^ 1, lit); }

  /// comp[lit] filled with SCC ids in completion order (sinks first);
  /// returns false when some variable's two literals share a component.
  bool solve(std::vector<int>& value) {
    build();
    tarjan();
    value.assign(n_ / 2, -1);
    for (int v = 0; v < n_ / 2; ++v) {
      if (comp_[2 * v] == comp_[2 * v + 1]) return false;
      value[v] = comp_[2 * v + 1] < comp_[2 * v] ? 1 : 0;
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> head_, next_, to_;
  std::vector<int> comp_;

  void build() {
    head_.assign(n_, -1);
    next_.resize(edges_.size());
    to_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      to_[i] = edges_[i].second;
      next_[i] = head_[edges_[i].first];
      head_[edges_[i].first] = static_cast<int>(i);
    }
  }

  // Iterative Tarjan; recursion would overflow on 1e5-vertex instances.
  void tarjan() {
    comp_.assign(n_, -1);
    std::vector<int> index(n_, -1), low(n_, 0), edge_it(n_, 0);
    std::vector<char> on_stack(n_, 0);
    std::vector<int> stack, call;
    int next_index = 0, next_comp = 0;

    for (int s = 0; s < n_; ++s) {
      if (index[s] != -1) continue;
      call.push_back(s);
      while (!call.empty()) {
        int v = call.back();
        if (index[v] == -1) {
          index[v] = low[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = 1;
          edge_it[v] = head_[v];
        }
        bool descended = false;
        while (edge_it[v] != -1) {
          int e = edge_it[v];
          int w = to_[e];
          edge_it[v] = next_[e];
          if (index[w] == -1) {
            call.push_back(w);
            descended = true;
            break;
          }
          if (on_stack[w]) low[v] = std::min(low[v], index[w]);
        }
        if (descended) continue;
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp_[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back();
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
};

}  // namespace

std::optional<Coloring> list_color_width2(const Graph& g,
                                          const ListAssignment& lists) {
  if (lists.size() < g.original_order())
    throw std::invalid_argument("list assignment does not cover the graph");

  std::vector<int> live = g.live_vertices();
  std::vector<int> var(g.original_order(), -1);
  int nvars = 0;
  for (int v : live)
    if (lists.list_size(v) == 2) var[v] = nvars++;

  TwoSat sat(nvars);
  auto literal = [&](int v, int color) {
    // valid only for binary vertices; lit true <=> v takes `color`
    return 2 * var[v] + (color == lists.hi(v) ? 1 : 0);
  };

  for (int v : live) {
    for (int w : g.neighbors(v)) {
      if (w < v) continue;
      for (int c = 1; c <= 3; ++c) {
        if (!lists.contains(v, c) || !lists.contains(w, c)) continue;
        bool v_forced = lists.list_size(v) == 1;
        bool w_forced = lists.list_size(w) == 1;
        if (v_forced && w_forced) return std::nullopt;  // equal singletons
        if (v_forced) {
          sat.force(literal(w, c) ^ 1);
        } else if (w_forced) {
          sat.force(literal(v, c) ^ 1);
        } else {
          sat.forbid_both(literal(v, c), literal(w, c));
        }
      }
    }
  }

  std::vector<int> value;
  if (!sat.solve(value)) return std::nullopt;

  Coloring c(g.original_order(), 0);
  for (int v : live)
    c[v] = lists.list_size(v) == 1 ? lists.lo(v)
                                   : (value[var[v]] ? lists.hi(v) : lists.lo(v));
  return c;
}

}  // namespace tricolor
