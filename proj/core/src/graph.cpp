#include "tricolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tricolor {

namespace {

bool sorted_contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void sorted_insert(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

void sorted_erase(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  original_n_ = n;
  live_count_ = n;
  alive_.assign(n, 1);
  adj_.assign(n, {});
  merge_.resize(n);
  for (int i = 0; i < n; ++i) merge_[i] = {i};
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop");
    if (!g.has_edge(a, b)) {
      sorted_insert(g.adj_[a], b);
      sorted_insert(g.adj_[b], a);
      ++g.edge_count_;
    }
  }
  return g;
}

void Graph::require_live(int v, const char* who) const {
  if (!alive(v))
    throw std::invalid_argument(std::string(who) + ": vertex " +
                                std::to_string(v) + " is not live");
}

bool Graph::has_edge(int u, int v) const {
  require_live(u, "has_edge");
  require_live(v, "has_edge");
  if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
  return sorted_contains(adj_[u], v);
}

int Graph::degree(int v) const {
  require_live(v, "degree");
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  require_live(v, "neighbors");
  return adj_[v];
}

std::vector<int> Graph::live_vertices() const {
  std::vector<int> out;
  out.reserve(live_count_);
  for (int v = 0; v < original_n_; ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

const std::vector<int>& Graph::merge_class(int v) const {
  require_live(v, "merge_class");
  return merge_[v];
}

Graph Graph::contracted(int keep, int drop) const {
  require_live(keep, "contracted");
  require_live(drop, "contracted");
  if (keep == drop) throw std::invalid_argument("contracted: identical vertices");

  Graph h(*this);
  h.edge_count_ -= h.degree(drop);
  for (int w : adj_[drop]) {
    sorted_erase(h.adj_[w], drop);
    if (w != keep && !sorted_contains(h.adj_[keep], w)) {
      sorted_insert(h.adj_[keep], w);
      sorted_insert(h.adj_[w], keep);
      ++h.edge_count_;
    }
  }
  h.adj_[drop].clear();
  h.alive_[drop] = 0;
  --h.live_count_;

  std::vector<int> cls;
  cls.reserve(merge_[keep].size() + merge_[drop].size());
  std::merge(merge_[keep].begin(), merge_[keep].end(), merge_[drop].begin(),
             merge_[drop].end(), std::back_inserter(cls));
  h.merge_[keep] = std::move(cls);
  h.merge_[drop].clear();
  return h;
}

Graph Graph::with_edge(int a, int b) const {
  require_live(a, "with_edge");
  require_live(b, "with_edge");
  if (a == b) throw std::invalid_argument("with_edge: self-loop");
  if (has_edge(a, b)) throw std::invalid_argument("with_edge: edge already present");
  Graph h(*this);
  sorted_insert(h.adj_[a], b);
  sorted_insert(h.adj_[b], a);
  ++h.edge_count_;
  return h;
}

std::vector<int> Graph::second_neighborhood(int v) const {
  require_live(v, "second_neighborhood");
  std::vector<char> seen(original_n_, 0);
  seen[v] = 1;
  for (int u : adj_[v]) seen[u] = 1;
  std::vector<int> out;
  for (int u : adj_[v])
    for (int w : adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(const std::vector<int>& verts,
                     std::vector<int>* old_ids) const {
  std::vector<int> index(original_n_, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    require_live(verts[i], "induced");
    if (index[verts[i]] != -1)
      throw std::invalid_argument("induced: duplicate vertex");
    index[verts[i]] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (int w : adj_[verts[i]]) {
      int j = index[w];
      if (j > static_cast<int>(i)) {
        sorted_insert(h.adj_[i], j);
        sorted_insert(h.adj_[j], static_cast<int>(i));
        ++h.edge_count_;
      }
    }
  }
  if (old_ids) *old_ids = verts;
  return h;
}

bool Graph::operator==(const Graph& other) const {
  return original_n_ == other.original_n_ && alive_ == other.alive_ &&
         adj_ == other.adj_ && merge_ == other.merge_;
}

void Graph::check_invariants() const {
  int live = 0;
  long long degree_sum = 0;
  std::vector<char> covered(original_n_, 0);
  for (int v = 0; v < original_n_; ++v) {
    if (!alive_[v]) {
      if (!adj_[v].empty() || !merge_[v].empty())
        throw std::logic_error("dead vertex with residual data");
      continue;
    }
    ++live;
    degree_sum += static_cast<long long>(adj_[v].size());
    if (!std::is_sorted(adj_[v].begin(), adj_[v].end()))
      throw std::logic_error("adjacency row not sorted");
    for (int w : adj_[v]) {
      if (w == v) throw std::logic_error("self-loop");
      if (!alive(w)) throw std::logic_error("edge to dead vertex");
      if (!sorted_contains(adj_[w], v)) throw std::logic_error("asymmetric edge");
    }
    if (std::adjacent_find(adj_[v].begin(), adj_[v].end()) != adj_[v].end())
      throw std::logic_error("parallel edge");
    for (int o : merge_[v]) {
      if (o < 0 || o >= original_n_ || covered[o])
        throw std::logic_error("merge classes do not partition the universe");
      covered[o] = 1;
    }
  }
  if (live != live_count_) throw std::logic_error("live count stale");
  if (degree_sum != 2LL * edge_count_) throw std::logic_error("edge count stale");
  for (int o = 0; o < original_n_; ++o)
    if (!covered[o]) throw std::logic_error("original vertex lost from merge classes");
}

}  // namespace tricolor
