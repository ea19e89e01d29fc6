#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "srlab/vertex_set.hpp"

namespace srlab {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("graph vertex count must lie in 0.." + std::to_string(kMaxVertices));
    }
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[idx(u)] = adj_[idx(u)].with(v);
    adj_[idx(v)] = adj_[idx(v)].with(u);
  }

  bool has_edge(int u, int v) const {
    if (u < 1 || u > n_) return false;
    return adj_[idx(u)].contains(v);
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[idx(v)];
  }

  /// Edges {u,v} with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u) {
      for (int v : adj_[idx(u)]) {
        if (v > u) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto s : adj_) twice += static_cast<std::size_t>(s.size());
    return twice / 2;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v - 1); }
  void check_vertex(int v) const {
    if (v < 1 || v > n_) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

enum class Family { P, L, S, C, W, C2, L2, Kmn, K2xKn, Grid, TreeEdges, ExplicitEdges };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::L: return "L";
    case Family::S: return "S";
    case Family::C: return "C";
    case Family::W: return "W";
    case Family::C2: return "C2";
    case Family::L2: return "L2";
    case Family::Kmn: return "Kmn";
    case Family::K2xKn: return "K2xKn";
    case Family::Grid: return "Grid";
    case Family::TreeEdges: return "TreeEdges";
    case Family::ExplicitEdges: return "ExplicitEdges";
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  static const std::map<std::string, Family> table = {
      {"P", Family::P},         {"L", Family::L},
      {"S", Family::S},         {"C", Family::C},
      {"W", Family::W},         {"C2", Family::C2},
      {"L2", Family::L2},       {"Kmn", Family::Kmn},
      {"K2xKn", Family::K2xKn}, {"Grid", Family::Grid},
      {"TreeEdges", Family::TreeEdges}, {"ExplicitEdges", Family::ExplicitEdges},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown graph family '" + name + "'");
  return it->second;
}

/**
 * Parameters of a named graph family.
 *
 * `n` is the family size parameter (for W it is the rim length, so W has n+1
 * vertices); Kmn and Grid also use `m`. Edge-list families use `edges`.
 */
struct FamilySpec {
  Family family = Family::P;
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;
};

namespace detail {

inline int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace detail

inline Graph build_family(const FamilySpec& spec) {
  using detail::require;
  const int n = spec.n;
  const int m = spec.m;
  switch (spec.family) {
    case Family::P: {
      require(n >= 1, "P_n needs n >= 1");
      return Graph(n);
    }
    case Family::L: {
      require(n >= 1, "L_n needs n >= 1");
      Graph g(n);
      for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case Family::S: {
      require(n >= 1, "S_n needs n >= 1");
      Graph g(n);
      for (int i = 1; i < n; ++i) g.add_edge(i, n);
      return g;
    }
    case Family::C: {
      require(n >= 3, "C_n needs n >= 3");
      Graph g(n);
      for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
      return g;
    }
    case Family::W: {
      require(n >= 3, "W_{n+1} needs rim length n >= 3");
      require(n + 1 <= kMaxVertices, "W_{n+1} too large");
      Graph g(n + 1);
      for (int i = 1; i <= n; ++i) {
        g.add_edge(i, i % n + 1);
        g.add_edge(i, n + 1);
      }
      return g;
    }
    case Family::C2: {
      require(n >= 3, "C2_n needs n >= 3");
      Graph g(n);
      for (int i = 1; i <= n; ++i) {
        g.add_edge(i, i % n + 1);
        const int j = (i + 1) % n + 1;
        if (j != i) g.add_edge(i, j);
      }
      return g;
    }
    case Family::L2: {
      require(n >= 1, "L2_n needs n >= 1");
      Graph g(n);
      for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
      for (int i = 1; i + 2 <= n; ++i) g.add_edge(i, i + 2);
      return g;
    }
    case Family::Kmn: {
      require(m >= 1 && n >= 1, "K_{m,n} needs m,n >= 1");
      require(m + n <= kMaxVertices, "K_{m,n} too large");
      Graph g(m + n);
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) g.add_edge(i, m + j);
      return g;
    }
    case Family::K2xKn: {
      require(n >= 1, "K2xKn needs n >= 1");
      require(2 * n <= kMaxVertices, "K2xKn too large");
      Graph g(2 * n);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          g.add_edge(i, j);
          g.add_edge(n + i, n + j);
        }
        g.add_edge(i, n + i);
      }
      return g;
    }
    case Family::Grid: {
      require(m >= 1 && n >= 1, "grid G_{m,n} needs m,n >= 1");
      require(m * n <= kMaxVertices, "grid too large");
      Graph g(m * n);
      auto at = [n](int i, int j) { return (i - 1) * n + j; };
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i < m) g.add_edge(at(i, j), at(i + 1, j));
          if (j < n) g.add_edge(at(i, j), at(i, j + 1));
        }
      }
      return g;
    }
    case Family::TreeEdges: {
      require(n >= 1, "tree needs n >= 1");
      require(spec.edges.size() == static_cast<std::size_t>(n - 1),
              "tree on " + std::to_string(n) + " vertices needs exactly " + std::to_string(n - 1) + " edges");
      std::vector<int> parent(static_cast<std::size_t>(n + 1));
      std::iota(parent.begin(), parent.end(), 0);
      Graph g(n);
      for (auto [u, v] : spec.edges) {
        require(u >= 1 && u <= n && v >= 1 && v <= n && u != v, "tree edge out of range");
        const int ru = detail::find_root(parent, u);
        const int rv = detail::find_root(parent, v);
        require(ru != rv, "tree edge list contains a cycle");
        parent[static_cast<std::size_t>(ru)] = rv;
        g.add_edge(u, v);
      }
      return g;
    }
    case Family::ExplicitEdges: {
      require(n >= 0, "graph needs n >= 0");
      Graph g(n);
      for (auto [u, v] : spec.edges) {
        require(u >= 1 && u <= n && v >= 1 && v <= n && u != v, "edge out of range");
        g.add_edge(u, v);
      }
      return g;
    }
  }
  throw std::invalid_argument("unhandled family");
}

inline Graph complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 1; u <= g.n(); ++u)
    for (int v = u + 1; v <= g.n(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

inline bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (v > g.n()) throw std::out_of_range("vertex set exceeds graph");
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

/// All independent k-sets, in lexicographic order.
inline std::vector<VertexSet> independent_sets(const Graph& g, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > g.n()) return out;
  // Depth-first over increasing vertices; `allowed` excludes chosen vertices' neighbors.
  auto rec = [&](auto&& self, int next, VertexSet chosen, VertexSet allowed) -> void {
    if (chosen.size() == k) {
      out.push_back(chosen);
      return;
    }
    const int need = k - chosen.size();
    for (int v = next; v <= g.n(); ++v) {
      if (!allowed.contains(v)) continue;
      if ((allowed - VertexSet::range(v - 1)).size() < need) break;
      self(self, v + 1, chosen.with(v), allowed - g.neighbors(v) - VertexSet::range(v));
    }
  };
  rec(rec, 1, VertexSet{}, g.vertices());
  return out;
}

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering (each vertex simplicial among its successors) when chordal.
  std::vector<int> elimination_order;
  /// A chordless cycle of length >= 4 when not chordal.
  std::vector<int> chordless_cycle;
};

/// Maximum cardinality search; returns vertices in visit order (ties broken by smallest label).
inline std::vector<int> maximum_cardinality_search(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> order;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    int best = 0;
    for (int v : unvisited) {
      if (best == 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    }
    order.push_back(best);
    unvisited = unvisited.without(best);
    for (int w : g.neighbors(best) & unvisited) ++weight[static_cast<std::size_t>(w)];
  }
  return order;
}

/// True iff every vertex is simplicial in the subgraph induced by itself and its successors.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
  if (order.size() != static_cast<std::size_t>(g.n())) return false;
  std::vector<int> pos(static_cast<std::size_t>(g.n() + 1), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (int v = 1; v <= g.n(); ++v) {
    if (pos[static_cast<std::size_t>(v)] < 0) return false;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexSet later;
    for (int w : g.neighbors(order[i])) {
      if (pos[static_cast<std::size_t>(w)] > static_cast<int>(i)) later = later.with(w);
    }
    for (int a : later)
      for (int b : later)
        if (a < b && !g.has_edge(a, b)) return false;
  }
  return true;
}

/// True iff `cycle` is a cycle of g of length >= 4 with no chords.
inline bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  if (VertexSet::of(cycle).size() != static_cast<int>(len)) return false;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace detail {

// Shortest path from u to w using only vertices in `allowed`; empty when none.
inline std::vector<int> shortest_path(const Graph& g, int u, int w, VertexSet allowed) {
  std::vector<int> prev(static_cast<std::size_t>(g.n() + 1), 0);
  std::queue<int> q;
  q.push(u);
  VertexSet seen = VertexSet{}.with(u);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (x == w) break;
    for (int y : g.neighbors(x) & allowed) {
      if (seen.contains(y)) continue;
      seen = seen.with(y);
      prev[static_cast<std::size_t>(y)] = x;
      q.push(y);
    }
  }
  if (!seen.contains(w)) return {};
  std::vector<int> path;
  for (int x = w; x != u; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

// Any chordless cycle through v leaves v via two nonadjacent neighbours u, w and
// returns along an induced path avoiding the rest of N[v].
inline std::vector<int> find_chordless_cycle(const Graph& g) {
  for (int v = 1; v <= g.n(); ++v) {
    const VertexSet nv = g.neighbors(v);
    for (int u : nv) {
      for (int w : nv) {
        if (w <= u || g.has_edge(u, w)) continue;
        const VertexSet allowed = (g.vertices() - nv - VertexSet{}.with(v)).with(u).with(w);
        auto path = shortest_path(g, u, w, allowed);
        if (path.empty()) continue;
        std::vector<int> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace detail

inline ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult r;
  auto visit = maximum_cardinality_search(g);
  std::reverse(visit.begin(), visit.end());
  if (is_perfect_elimination_order(g, visit)) {
    r.chordal = true;
    r.elimination_order = std::move(visit);
    return r;
  }
  r.chordless_cycle = detail::find_chordless_cycle(g);
  return r;
}

/// Inclusion-maximal cliques in lexicographic order. Isolated vertices are singleton cliques.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.n() == 0) {
    out.push_back(VertexSet{});
    return out;
  }
  // Bron-Kerbosch with pivoting.
  auto rec = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    int pivot = 0;
    int best = -1;
    for (int u : p | x) {
      const int c = (p & g.neighbors(u)).size();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (int v : p - g.neighbors(pivot)) {
      self(self, r.with(v), p & g.neighbors(v), x & g.neighbors(v));
      p = p.without(v);
      x = x.with(v);
    }
  };
  rec(rec, VertexSet{}, g.vertices(), VertexSet{});
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

namespace detail {

inline std::string rooted_code(const Graph& t, int root, int parent) {
  std::vector<std::string> kids;
  for (int c : t.neighbors(root)) {
    if (c != parent) kids.push_back(rooted_code(t, c, root));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

}  // namespace detail

/// Canonical isomorphism code of a tree (AHU encoding rooted at the center).
inline std::string tree_canonical_code(const Graph& t) {
  if (t.n() == 0) return "";
  if (t.edge_count() != static_cast<std::size_t>(t.n() - 1)) throw std::invalid_argument("not a tree");
  // Peel leaves until one or two centers remain.
  std::vector<int> degree(static_cast<std::size_t>(t.n() + 1));
  VertexSet alive = t.vertices();
  for (int v : alive) degree[static_cast<std::size_t>(v)] = t.neighbors(v).size();
  while (alive.size() > 2) {
    VertexSet leaves;
    for (int v : alive)
      if (degree[static_cast<std::size_t>(v)] <= 1) leaves = leaves.with(v);
    for (int v : leaves) {
      for (int w : t.neighbors(v) & alive) --degree[static_cast<std::size_t>(w)];
    }
    alive = alive - leaves;
  }
  std::string best;
  for (int c : alive) {
    auto code = detail::rooted_code(t, c, 0);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

/// One representative of every isomorphism class of trees on n vertices, sorted by canonical code.
inline std::vector<Graph> nonisomorphic_trees(int n) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("tree size out of range");
  std::map<std::string, std::vector<Edge>> level;
  level.emplace(tree_canonical_code(Graph(1)), std::vector<Edge>{});
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, std::vector<Edge>> next;
    for (const auto& [code, edges] : level) {
      for (int attach = 1; attach < size; ++attach) {
        auto grown = edges;
        grown.emplace_back(attach, size);
        Graph t(size, grown);
        next.emplace(tree_canonical_code(t), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& [code, edges] : level) out.emplace_back(n, edges);
  return out;
}

}  // namespace srlab
