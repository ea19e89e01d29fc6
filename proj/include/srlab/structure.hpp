#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/errors.hpp"
#include "srlab/graph.hpp"
#include "srlab/resolution.hpp"

namespace srlab {

inline constexpr std::size_t kDefaultFatForestFacets = 16;
inline constexpr std::size_t kDefaultShellingFacets = 12;
inline constexpr int kDefaultDecompositionGround = 16;

/// Shedding-vertex tree; node 0 is the root. A node with vertex 0 is a simplex leaf.
struct SheddingTree {
  struct Node {
    int vertex = 0;
    int link = -1;
    int deletion = -1;
  };
  std::vector<Node> nodes;
};

struct StructureVerdict {
  std::string property;
  bool verdict = false;
  std::optional<FatForestDecomposition> decomposition;
  /// Shelling order as indices into the complex's facet list.
  std::vector<std::size_t> shelling_order;
  std::optional<SheddingTree> shedding;
  /// Vertex decomposability under the pure (Provan-Billera) definition; set only for that property.
  std::optional<bool> standard_verdict;
  std::string note;
};

struct StructureLimits {
  std::size_t max_fat_forest_facets = kDefaultFatForestFacets;
  std::size_t max_shelling_facets = kDefaultShellingFacets;
  int max_decomposition_ground = kDefaultDecompositionGround;
  bool allow_large = false;
};

namespace detail {

// Largest of the intersections F & G over G in `prior`, or nullopt when they are not nested.
inline std::optional<Mask> nested_intersection(Mask f, const std::vector<Mask>& prior) {
  Mask best = 0;
  for (auto g : prior)
    if (std::popcount(f & g) > std::popcount(best)) best = f & g;
  for (auto g : prior)
    if (((f & g) & ~best) != 0) return std::nullopt;
  return best;
}

class FatForestSearch {
 public:
  explicit FatForestSearch(const std::vector<VertexSet>& facets) {
    for (auto f : facets) facets_.push_back(f.bits());
  }

  bool run(std::vector<std::size_t>& order) {
    const std::size_t m = facets_.size();
    for (std::size_t first = 0; first < m; ++first) {
      order = {first};
      if (extend(std::uint64_t{1} << first, order)) return true;
    }
    return false;
  }

 private:
  bool extend(std::uint64_t used, std::vector<std::size_t>& order) {
    const std::size_t m = facets_.size();
    if (std::popcount(used) == static_cast<int>(m)) return true;
    if (failed_.count(used)) return false;
    std::vector<Mask> prior;
    for (auto i : order) prior.push_back(facets_[i]);
    for (std::size_t i = 0; i < m; ++i) {
      if ((used >> i) & 1u) continue;
      if (!nested_intersection(facets_[i], prior)) continue;
      order.push_back(i);
      if (extend(used | (std::uint64_t{1} << i), order)) return true;
      order.pop_back();
    }
    failed_.insert(used);
    return false;
  }

  std::vector<Mask> facets_;
  std::unordered_set<std::uint64_t> failed_;
};

}  // namespace detail

/// Replays a decomposition: each facet meets the union of its predecessors in a single simplex.
inline bool validate_fat_forest(const SimplicialComplex& c, const FatForestDecomposition& d) {
  const auto& facets = c.facets();
  if (d.facet_order.size() != facets.size() || d.simplex_dims.size() != facets.size()) return false;
  if (d.overlap_dims.size() + 1 != facets.size()) return false;
  std::vector<bool> seen(facets.size(), false);
  std::vector<VertexSet> prior;
  for (std::size_t step = 0; step < d.facet_order.size(); ++step) {
    const auto idx = d.facet_order[step];
    if (idx >= facets.size() || seen[idx]) return false;
    seen[idx] = true;
    const auto f = facets[idx];
    if (d.simplex_dims[step] != f.size() - 1) return false;
    if (step > 0) {
      // Faces of F lying in the union: the intersection is a simplex iff its vertex set is itself covered.
      VertexSet meet;
      for (auto g : prior) meet = meet | (f & g);
      bool covered = false;
      for (auto g : prior)
        if (meet.subset_of(g)) covered = true;
      if (!covered || d.overlap_dims[step - 1] != meet.size() - 1) return false;
    }
    prior.push_back(f);
  }
  return true;
}

/**
 * Searches for a facet order F_1..F_k in which every F_i meets F_1 | ... | F_{i-1}
 * in a simplex (possibly empty). Failed prefixes are memoized by facet subset.
 */
inline StructureVerdict is_fat_forest(const SimplicialComplex& c, const StructureLimits& limits = {}) {
  StructureVerdict v;
  v.property = "fat_forest";
  if (c.is_void()) {
    v.note = "void complex";
    return v;
  }
  const auto m = c.facet_count();
  if (m >= kMaxVertices || (m >= limits.max_fat_forest_facets && !limits.allow_large)) {
    throw GuardError("fat forest search over " + std::to_string(m) + " facets exceeds bound " +
                         std::to_string(limits.max_fat_forest_facets),
                     "--allow-large");
  }
  detail::FatForestSearch search(c.facets());
  std::vector<std::size_t> order;
  if (!search.run(order)) {
    v.note = "no facet order glues along simplices";
    return v;
  }
  FatForestDecomposition d;
  d.facet_order = order;
  std::vector<Mask> prior;
  for (auto idx : order) {
    const Mask f = c.facets()[idx].bits();
    d.simplex_dims.push_back(std::popcount(f) - 1);
    if (!prior.empty()) d.overlap_dims.push_back(std::popcount(*detail::nested_intersection(f, prior)) - 1);
    prior.push_back(f);
  }
  v.verdict = true;
  v.decomposition = std::move(d);
  return v;
}

struct FrobergReport {
  bool chordal = false;
  /// Generator degree of the clique complex's resolution when it is linear.
  std::optional<int> linear_degree;
  bool two_linear = false;
  bool fat_forest = false;
  bool consistent = false;
};

/// Chordality of g against 2-linearity and fat-forest shape of its clique complex.
inline FrobergReport froberg_check(const Graph& g, const Field& field, const HochsterOptions& opts = {},
                                   const StructureLimits& limits = {}) {
  FrobergReport r;
  const auto c = clique_complex(g);
  r.chordal = is_chordal(g).chordal;
  const auto table = betti_hochster(c, field, opts);
  r.linear_degree = has_linear_resolution(table);
  // A complete graph has the zero ideal, which is vacuously 2-linear.
  r.two_linear = r.linear_degree ? *r.linear_degree == 2 : table.entries().size() == 1;
  r.fat_forest = is_fat_forest(c, limits).verdict;
  r.consistent = r.chordal == r.two_linear && r.two_linear == r.fat_forest;
  return r;
}

namespace detail {

using FacetList = std::vector<Mask>;

inline FacetList maximal_masks(FacetList sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  FacetList out;
  for (auto s : sets) {
    bool dominated = false;
    for (auto t : sets)
      if (t != s && (s & ~t) == 0) dominated = true;
    if (!dominated) out.push_back(s);
  }
  return out;
}

inline FacetList link_of(const FacetList& f, Mask v) {
  FacetList out;
  for (auto s : f)
    if (s & v) out.push_back(s & ~v);
  return maximal_masks(std::move(out));
}

inline FacetList deletion_of(const FacetList& f, Mask v) {
  FacetList out;
  for (auto s : f) out.push_back(s & ~v);
  return maximal_masks(std::move(out));
}

inline int dim_of(const FacetList& f) {
  int d = -1;
  for (auto s : f) d = std::max(d, std::popcount(s) - 1);
  return d;
}

inline bool pure_of(const FacetList& f) {
  for (auto s : f)
    if (std::popcount(s) != std::popcount(f.front())) return false;
  return true;
}

inline Mask support_of(const FacetList& f) {
  Mask s = 0;
  for (auto x : f) s |= x;
  return s;
}

class DecompositionSearch {
 public:
  bool decomposable(const FacetList& f) {
    if (f.size() == 1) return true;
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second != kFail;
    const int d = dim_of(f);
    int choice = kFail;
    for (Mask rest = support_of(f); rest != 0; rest &= rest - 1) {
      const Mask v = rest & (~rest + 1);
      const auto del = deletion_of(f, v);
      if (!pure_of(del) || dim_of(del) != d) continue;
      if (decomposable(link_of(f, v)) && decomposable(del)) {
        choice = std::countr_zero(v) + 1;
        break;
      }
    }
    memo_[f] = choice;
    return choice != kFail;
  }

  // Rebuilds the shedding tree from the memo.
  int build(const FacetList& f, SheddingTree& tree) {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({});
    if (f.size() == 1) return id;
    const int v = memo_.at(f);
    const Mask bit = Mask{1} << (v - 1);
    const int lk = build(link_of(f, bit), tree);
    const int del = build(deletion_of(f, bit), tree);
    tree.nodes[static_cast<std::size_t>(id)] = {v, lk, del};
    return id;
  }

 private:
  static constexpr int kFail = 0;
  std::map<FacetList, int> memo_;
};

inline FacetList masks_of(const SimplicialComplex& c) {
  FacetList f;
  for (auto s : c.facets()) f.push_back(s.bits());
  return maximal_masks(std::move(f));
}

}  // namespace detail

/**
 * Vertex decomposability as defined recursively: a simplex, or some vertex v with
 * lk v and del v decomposable and del v pure of the same dimension. The
 * standard verdict additionally requires purity; the two agree on pure input.
 */
inline StructureVerdict is_vertex_decomposable(const SimplicialComplex& c, const StructureLimits& limits = {}) {
  StructureVerdict v;
  v.property = "vertex_decomposable";
  if (c.is_void()) {
    v.note = "void complex";
    v.standard_verdict = false;
    return v;
  }
  const int support = c.support().size();
  if (support > limits.max_decomposition_ground && !limits.allow_large) {
    throw GuardError("vertex decomposition search on " + std::to_string(support) + " vertices exceeds bound " +
                         std::to_string(limits.max_decomposition_ground),
                     "--allow-large");
  }
  detail::DecompositionSearch search;
  const auto f = detail::masks_of(c);
  v.verdict = search.decomposable(f);
  v.standard_verdict = v.verdict && is_pure(c);
  if (v.verdict) {
    SheddingTree tree;
    search.build(f, tree);
    v.shedding = std::move(tree);
  } else {
    v.note = "no shedding vertex sequence reaches simplices";
  }
  if (v.verdict && !*v.standard_verdict) v.note = "decomposable as defined, but not pure";
  return v;
}

/// Replays a shedding tree against the definition without any search.
inline bool validate_shedding_tree(const SimplicialComplex& c, const SheddingTree& tree) {
  if (tree.nodes.empty() || c.is_void()) return false;
  std::size_t visited = 0;
  auto check = [&](auto&& self, const detail::FacetList& f, int id) -> bool {
    if (id < 0 || static_cast<std::size_t>(id) >= tree.nodes.size()) return false;
    ++visited;
    const auto& node = tree.nodes[static_cast<std::size_t>(id)];
    if (node.vertex == 0) return f.size() == 1;
    if (node.vertex < 1 || node.vertex > kMaxVertices) return false;
    const Mask bit = VertexSet::bit(node.vertex);
    if ((detail::support_of(f) & bit) == 0) return false;
    const auto del = detail::deletion_of(f, bit);
    if (!detail::pure_of(del) || detail::dim_of(del) != detail::dim_of(f)) return false;
    return self(self, detail::link_of(f, bit), node.link) && self(self, del, node.deletion);
  };
  return check(check, detail::masks_of(c), 0) && visited == tree.nodes.size();
}

/// Replays a shelling order: each facet meets the earlier ones in a pure complex of codimension one.
inline bool validate_shelling(const SimplicialComplex& c, const std::vector<std::size_t>& order) {
  const auto& facets = c.facets();
  if (order.size() != facets.size() || c.is_void() || !is_pure(c)) return false;
  std::vector<bool> seen(facets.size(), false);
  for (std::size_t step = 0; step < order.size(); ++step) {
    if (order[step] >= facets.size() || seen[order[step]]) return false;
    seen[order[step]] = true;
    if (step == 0) continue;
    const auto f = facets[order[step]];
    // Maximal faces of <F> lying in an earlier facet must all have size |F| - 1.
    std::vector<VertexSet> meet;
    for (std::size_t j = 0; j < step; ++j) meet.push_back(f & facets[order[j]]);
    for (auto m : detail::maximal_sets(meet))
      if (m.size() != f.size() - 1) return false;
  }
  return true;
}

/**
 * Shelling search over facet orders. Whether a facet can be appended depends
 * only on the set already placed, so failed sets are memoized. Candidates are
 * tried by descending overlap with the placed facets.
 */
inline StructureVerdict is_pure_shellable(const SimplicialComplex& c, const StructureLimits& limits = {}) {
  StructureVerdict v;
  v.property = "pure_shellable";
  if (c.is_void()) {
    v.note = "void complex";
    return v;
  }
  if (!is_pure(c)) {
    v.note = "not pure";
    return v;
  }
  const auto m = c.facet_count();
  if (m >= kMaxVertices || (m > limits.max_shelling_facets && !limits.allow_large)) {
    throw GuardError("shelling search over " + std::to_string(m) + " facets exceeds bound " +
                         std::to_string(limits.max_shelling_facets),
                     "--allow-large");
  }
  std::vector<Mask> f;
  for (auto s : c.facets()) f.push_back(s.bits());
  const int codim_one = std::popcount(f.front()) - 1;
  std::unordered_set<std::uint64_t> failed;
  std::vector<std::size_t> order;

  auto addable = [&](std::size_t i) {
    std::vector<Mask> meets;
    for (auto j : order) meets.push_back(f[i] & f[j]);
    // Every intersection must sit inside one of size |F| - 1.
    std::vector<Mask> ridges;
    for (auto x : meets)
      if (std::popcount(x) == codim_one) ridges.push_back(x);
    if (ridges.empty()) return false;
    for (auto x : meets) {
      bool inside = false;
      for (auto r : ridges)
        if ((x & ~r) == 0) inside = true;
      if (!inside) return false;
    }
    return true;
  };

  auto extend = [&](auto&& self, std::uint64_t used) -> bool {
    if (order.size() == m) return true;
    if (failed.count(used)) return false;
    std::vector<std::pair<int, std::size_t>> candidates;
    for (std::size_t i = 0; i < m; ++i) {
      if ((used >> i) & 1u) continue;
      if (!addable(i)) continue;
      int overlap = 0;
      for (auto j : order) overlap += std::popcount(f[i] & f[j]);
      candidates.push_back({-overlap, i});
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto [_, i] : candidates) {
      order.push_back(i);
      if (self(self, used | (std::uint64_t{1} << i))) return true;
      order.pop_back();
    }
    failed.insert(used);
    return false;
  };

  for (std::size_t first = 0; first < m; ++first) {
    order = {first};
    if (extend(extend, std::uint64_t{1} << first)) {
      v.verdict = true;
      v.shelling_order = order;
      return v;
    }
  }
  v.note = "no facet order is a shelling";
  return v;
}

/**
 * Shelling order read off a shedding tree of a pure complex: a shelling of
 * del v followed by the cones v * (shelling of lk v).
 */
inline std::vector<std::size_t> shelling_from_shedding(const SimplicialComplex& c, const SheddingTree& tree) {
  std::vector<Mask> out;
  auto walk = [&](auto&& self, const detail::FacetList& f, int id, Mask cone) -> void {
    const auto& node = tree.nodes.at(static_cast<std::size_t>(id));
    if (node.vertex == 0) {
      out.push_back(f.front() | cone);
      return;
    }
    const Mask bit = VertexSet::bit(node.vertex);
    self(self, detail::deletion_of(f, bit), node.deletion, cone);
    self(self, detail::link_of(f, bit), node.link, cone | bit);
  };
  walk(walk, detail::masks_of(c), 0, 0);
  std::vector<std::size_t> order;
  for (auto mask : out) {
    const auto& facets = c.facets();
    auto it = std::find(facets.begin(), facets.end(), VertexSet{mask});
    if (it == facets.end()) throw std::invalid_argument("shedding tree does not produce the facets of the complex");
    order.push_back(static_cast<std::size_t>(it - facets.begin()));
  }
  return order;
}

}  // namespace srlab
