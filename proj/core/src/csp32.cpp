#include "tricolor/csp32.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tricolor/errors.hpp"

namespace tricolor {

namespace {

constexpr std::uint8_t kFullDomain = 0b111;

constexpr std::uint8_t color_bit(int c) {
  return static_cast<std::uint8_t>(1u << (c - 1));
}

int lowest_color(std::uint8_t mask) {
  return std::countr_zero(static_cast<unsigned>(mask)) + 1;
}

}  // namespace

Csp32Instance::Csp32Instance(int nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
  domains_.assign(nvars, kFullDomain);
}

std::uint8_t Csp32Instance::domain_mask(int var) const {
  if (var < 0 || var >= var_count())
    throw std::invalid_argument("variable out of range");
  return domains_[var];
}

std::vector<int> Csp32Instance::domain_values(int var) const {
  std::uint8_t m = domain_mask(var);
  std::vector<int> out;
  for (int c = 1; c <= 3; ++c)
    if (m & color_bit(c)) out.push_back(c);
  return out;
}

void Csp32Instance::set_domain(int var, const std::vector<int>& values) {
  if (var < 0 || var >= var_count())
    throw std::invalid_argument("variable out of range");
  std::uint8_t m = 0;
  for (int c : values) {
    if (c < 1 || c > 3) throw std::invalid_argument("value outside {1,2,3}");
    m |= color_bit(c);
  }
  if (m == 0) throw std::invalid_argument("empty domain");
  domains_[var] = m;
}

void Csp32Instance::add_nogood(int x, int a, int y, int b) {
  if (x < 0 || x >= var_count() || y < 0 || y >= var_count())
    throw std::invalid_argument("nogood variable out of range");
  if (x == y) throw std::invalid_argument("nogood must couple two distinct variables");
  if (a < 1 || a > 3 || b < 1 || b > 3)
    throw std::invalid_argument("nogood value outside {1,2,3}");
  Nogood ng = x < y ? Nogood{x, a, y, b} : Nogood{y, b, x, a};
  auto it = std::lower_bound(nogoods_.begin(), nogoods_.end(), ng);
  if (it == nogoods_.end() || !(*it == ng)) nogoods_.insert(it, ng);
}

void Csp32Instance::set_origin_map(std::vector<int> origin) {
  if (static_cast<int>(origin.size()) != var_count())
    throw std::invalid_argument("origin map size mismatch");
  origin_ = std::move(origin);
}

namespace {

// One incident constraint from x's point of view: x=value is forbidden
// together with other=other_value.
struct Arc {
  int value;
  int other;
  int other_value;
};

class CspSearch {
 public:
  CspSearch(const Csp32Instance& inst, std::uint64_t* nodes,
            std::uint64_t budget)
      : n_(inst.var_count()), nodes_(nodes), budget_(budget) {
    arcs_.resize(n_);
    for (const Nogood& ng : inst.nogoods()) {
      arcs_[ng.x].push_back({ng.a, ng.y, ng.b});
      arcs_[ng.y].push_back({ng.b, ng.x, ng.a});
    }
    root_.resize(n_);
    for (int i = 0; i < n_; ++i) root_[i] = inst.domain_mask(i);
  }

  CspResult run() {
    std::vector<std::uint8_t> dom = root_;
    if (!search(dom)) return {};
    CspResult r;
    r.sat = true;
    r.assignment.resize(n_);
    for (int i = 0; i < n_; ++i) r.assignment[i] = lowest_color(witness_[i]);
    return r;
  }

 private:
  int n_;
  std::uint64_t* nodes_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t budget_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::uint8_t> root_;
  std::vector<std::uint8_t> witness_;

  void tick() {
    ++local_nodes_;
    if (nodes_) ++*nodes_;
    if (local_nodes_ > budget_) throw BudgetExhausted();
  }

  static bool singleton(std::uint8_t m) { return std::has_single_bit(static_cast<unsigned>(m)); }

  // Propagates singleton domains through the nogoods to a fixpoint.
  // Returns false on a wiped-out domain.
  bool propagate(std::vector<std::uint8_t>& dom, std::vector<int>& queue) const {
    std::size_t head = 0;
    while (head < queue.size()) {
      int x = queue[head++];
      int a = lowest_color(dom[x]);
      for (const Arc& arc : arcs_[x]) {
        if (arc.value != a) continue;
        std::uint8_t bit = color_bit(arc.other_value);
        if (!(dom[arc.other] & bit)) continue;
        bool was_single = singleton(dom[arc.other]);
        dom[arc.other] = static_cast<std::uint8_t>(dom[arc.other] & ~bit);
        if (dom[arc.other] == 0) return false;
        if (!was_single && singleton(dom[arc.other])) queue.push_back(arc.other);
      }
    }
    return true;
  }

  bool active(const std::vector<std::uint8_t>& dom, int x, const Arc& arc) const {
    return !singleton(dom[arc.other]) && (dom[x] & color_bit(arc.value)) &&
           (dom[arc.other] & color_bit(arc.other_value));
  }

  bool search(std::vector<std::uint8_t>& dom) {
    tick();
    std::vector<int> queue;
    for (int i = 0; i < n_; ++i)
      if (singleton(dom[i])) queue.push_back(i);
    if (!propagate(dom, queue)) return false;

    // Branch target: minimum domain, then maximum active-constraint count,
    // then lowest id. Variables with no active constraint are settled
    // greedily: propagation already pruned everything their decided
    // neighbors imply, so any remaining value is safe.
    int best = -1, best_size = 4, best_deg = -1;
    bool any_constrained = false;
    for (int i = 0; i < n_; ++i) {
      if (singleton(dom[i])) continue;
      int deg = 0;
      for (const Arc& arc : arcs_[i])
        if (active(dom, i, arc)) ++deg;
      if (deg == 0) continue;
      any_constrained = true;
      int size = std::popcount(static_cast<unsigned>(dom[i]));
      if (size < best_size || (size == best_size && deg > best_deg)) {
        best = i;
        best_size = size;
        best_deg = deg;
      }
    }

    if (!any_constrained) {
      witness_ = dom;
      for (int i = 0; i < n_; ++i)
        if (!singleton(witness_[i]))
          witness_[i] = color_bit(lowest_color(witness_[i]));
      return true;
    }

    for (int c = 1; c <= 3; ++c) {
      if (!(dom[best] & color_bit(c))) continue;
      std::vector<std::uint8_t> child = dom;
      child[best] = color_bit(c);
      if (search(child)) return true;
    }
    return false;
  }
};

}  // namespace

CspResult solve_csp(const Csp32Instance& inst, std::uint64_t* nodes,
                    std::uint64_t node_budget) {
  CspSearch s(inst, nodes, node_budget);
  return s.run();
}

Csp32Instance build_case1_csp(const Graph& g, int v,
                              const NeighborhoodStructure& s) {
  std::vector<char> in_closed(g.original_order(), 0);
  in_closed[v] = 1;
  for (int u : g.neighbors(v)) in_closed[u] = 1;

  std::vector<int> h_vertices;
  for (int u : g.live_vertices())
    if (!in_closed[u]) h_vertices.push_back(u);

  std::vector<int> var_of(g.original_order(), -1);
  for (std::size_t i = 0; i < h_vertices.size(); ++i)
    var_of[h_vertices[i]] = static_cast<int>(i);

  Csp32Instance inst(static_cast<int>(h_vertices.size()));
  inst.set_origin_map(h_vertices);

  // Edges inside H keep the coloring proper.
  for (int x : h_vertices)
    for (int w : g.neighbors(x))
      if (var_of[w] > var_of[x]) {
        for (int c = 1; c <= 3; ++c)
          inst.add_nogood(var_of[x], c, var_of[w], c);
      }

  // A neighbor of the pivot sees at most one of {2,3} among its H-neighbors,
  // otherwise it has no color left.
  for (int u : g.neighbors(v)) {
    std::vector<int> hs;
    for (int w : g.neighbors(u))
      if (var_of[w] != -1) hs.push_back(w);
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        inst.add_nogood(var_of[hs[i]], 2, var_of[hs[j]], 3);
        inst.add_nogood(var_of[hs[i]], 3, var_of[hs[j]], 2);
      }
  }

  // A matched pair takes {2,3} in some order, so opposite ends of a pair
  // cannot see the same color from H.
  for (auto [u, w] : s.pairs) {
    for (int x : g.neighbors(u)) {
      if (var_of[x] == -1) continue;
      for (int y : g.neighbors(w)) {
        if (var_of[y] == -1) continue;
        if (x == y)
          throw std::logic_error(
              "build_case1_csp: pair with a common outside neighbor, "
              "reduction missed");
        inst.add_nogood(var_of[x], 2, var_of[y], 2);
        inst.add_nogood(var_of[x], 3, var_of[y], 3);
      }
    }
  }
  return inst;
}

Coloring extend_csp_solution(const Graph& g, int v,
                             const NeighborhoodStructure& s,
                             const Csp32Instance& inst,
                             const std::vector<int>& assignment) {
  if (inst.origin_map().empty() && inst.var_count() > 0)
    throw std::invalid_argument("instance carries no origin map");
  if (assignment.size() != static_cast<std::size_t>(inst.var_count()))
    throw std::invalid_argument("assignment size mismatch");

  Coloring c(g.original_order(), 0);
  c[v] = 1;
  for (int i = 0; i < inst.var_count(); ++i)
    c[inst.origin_map()[i]] = assignment[i];

  // The colors of {2,3} a neighborhood vertex sees among its already-colored
  // H-neighbors; the encoding guarantees at most one.
  auto seen_23 = [&](int u) {
    int seen = 0;
    for (int w : g.neighbors(u)) {
      if (w == v || c[w] <= 1) continue;
      if (g.has_edge(v, w)) continue;  // inside N(v), not colored yet
      if (seen != 0 && seen != c[w])
        throw std::logic_error("extend_csp_solution: both 2 and 3 blocked");
      seen = c[w];
    }
    return seen;
  };

  for (auto [u, w] : s.pairs) {
    int a = seen_23(u);
    int b = seen_23(w);
    if (a != 0 && a == b)
      throw std::logic_error("extend_csp_solution: pair blocked on one color");
    int cu;
    if (a != 0)
      cu = 5 - a;  // u avoids a, w takes it (b != a when constrained)
    else if (b != 0)
      cu = b;  // w avoids b, u takes it
    else
      cu = 2;
    c[u] = cu;
    c[w] = 5 - cu;
  }
  for (int z : s.singletons) {
    int a = seen_23(z);
    c[z] = a == 2 ? 3 : 2;  // smallest free color in {2,3}
  }
  return c;
}

Csp32Instance parse_csp32(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int nvars = 0;
  std::optional<Csp32Instance> inst;
  std::vector<char> domain_set;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") continue;
    if (tag == "csp32") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string rest;
      if (!(ls >> nvars) || nvars < 0 || (ls >> rest))
        throw ParseError(lineno, "malformed header, expected 'csp32 <nvars>'");
      inst.emplace(nvars);
      domain_set.assign(nvars, 0);
      have_header = true;
    } else if (tag == "d") {
      if (!have_header) throw ParseError(lineno, "domain line before header");
      int var;
      if (!(ls >> var) || var < 1 || var > nvars)
        throw ParseError(lineno, "variable out of range");
      if (domain_set[var - 1]) throw ParseError(lineno, "duplicate domain line");
      domain_set[var - 1] = 1;
      std::vector<int> values;
      int val;
      while (ls >> val) {
        if (val < 1 || val > 3) throw ParseError(lineno, "value outside {1,2,3}");
        values.push_back(val);
      }
      if (!ls.eof()) throw ParseError(lineno, "malformed domain line");
      if (values.empty()) throw ParseError(lineno, "empty domain");
      inst->set_domain(var - 1, values);
    } else if (tag == "f") {
      if (!have_header) throw ParseError(lineno, "nogood line before header");
      int x, a, y, b;
      std::string rest;
      if (!(ls >> x >> a >> y >> b) || (ls >> rest))
        throw ParseError(lineno, "malformed nogood line, expected 'f <x> <a> <y> <b>'");
      if (x < 1 || x > nvars || y < 1 || y > nvars)
        throw ParseError(lineno, "variable out of range");
      if (x == y) throw ParseError(lineno, "nogood must couple two distinct variables");
      if (a < 1 || a > 3 || b < 1 || b > 3)
        throw ParseError(lineno, "value outside {1,2,3}");
      inst->add_nogood(x - 1, a, y - 1, b);
    } else {
      throw ParseError(lineno, "unrecognized line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  return *inst;
}

std::string write_csp32(const Csp32Instance& inst) {
  std::ostringstream out;
  out << "csp32 " << inst.var_count() << '\n';
  for (int i = 0; i < inst.var_count(); ++i) {
    if (inst.domain_mask(i) == kFullDomain) continue;
    out << "d " << i + 1;
    for (int c : inst.domain_values(i)) out << ' ' << c;
    out << '\n';
  }
  for (const Nogood& ng : inst.nogoods())
    out << "f " << ng.x + 1 << ' ' << ng.a << ' ' << ng.y + 1 << ' ' << ng.b
        << '\n';
  return out.str();
}

}  // namespace tricolor
