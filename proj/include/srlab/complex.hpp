#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "srlab/errors.hpp"
#include "srlab/graph.hpp"
#include "srlab/vertex_set.hpp"

namespace srlab {

/// Dimension reported for the void complex (it has no faces at all).
inline constexpr int kVoidDimension = INT_MIN;

/// Largest ground set for which face enumeration runs without an explicit override.
inline constexpr int kDefaultFaceGround = 24;

struct Limits {
  int max_face_ground = kDefaultFaceGround;
  bool allow_large = false;
};

namespace detail {

/// Inclusion-maximal members of `sets`, deduplicated, in lexicographic order.
inline std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (auto s : sets) {
    bool dominated = false;
    for (auto k : kept) {
      if (s.subset_of(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), LexLess{});
  return kept;
}

/// Inclusion-minimal members of `sets`, deduplicated, ordered by size then lexicographically.
inline std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (auto s : sets) {
    bool dominated = false;
    for (auto k : kept) {
      if (k.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

}  // namespace detail

/**
 * A simplicial complex on the explicit ground set {1..n}, stored by its facets.
 *
 * Ground vertices need not be faces. Two degenerate values are distinguished:
 * the void complex (no faces at all, empty facet list) and the irrelevant
 * complex (only the empty face, facet list [{}]).
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(int n, std::vector<VertexSet> generators) {
    check_ground(n);
    const VertexSet ground = VertexSet::range(n);
    for (auto g : generators) {
      if (!g.subset_of(ground)) {
        throw std::invalid_argument("face " + g.to_string() + " not contained in ground set 1.." + std::to_string(n));
      }
    }
    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = detail::maximal_sets(std::move(generators));
    return c;
  }

  static SimplicialComplex void_complex(int n) {
    check_ground(n);
    SimplicialComplex c;
    c.n_ = n;
    return c;
  }
  static SimplicialComplex irrelevant(int n) { return from_facets(n, {VertexSet{}}); }
  static SimplicialComplex simplex(int n) { return from_facets(n, {VertexSet::range(n)}); }

  int ground() const { return n_; }
  VertexSet ground_set() const { return VertexSet::range(n_); }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  bool is_full_simplex() const { return facets_.size() == 1 && facets_.front() == ground_set(); }

  bool contains(VertexSet face) const {
    for (auto f : facets_)
      if (face.subset_of(f)) return true;
    return false;
  }

  /// Union of all facets (the vertices that are faces).
  VertexSet support() const {
    VertexSet s;
    for (auto f : facets_) s = s | f;
    return s;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  static void check_ground(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("ground set size must lie in 0.." + std::to_string(kMaxVertices));
    }
  }

  int n_ = 0;
  std::vector<VertexSet> facets_;
};

/// Face counts (f_{-1}, f_0, ..., f_d); empty for the void complex.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  /// f_i for i >= -1; zero beyond the stored range.
  std::int64_t at(int i) const {
    const auto idx = static_cast<std::size_t>(i + 1);
    return (i < -1 || idx >= c_.size()) ? 0 : c_[idx];
  }
  /// Largest i with f_i != 0, or -2 when empty.
  int top() const { return static_cast<int>(c_.size()) - 2; }
  bool empty() const { return c_.empty(); }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<std::int64_t> c_;
};

inline int dimension(const SimplicialComplex& c) {
  if (c.is_void()) return kVoidDimension;
  int d = -1;
  for (auto f : c.facets()) d = std::max(d, f.size() - 1);
  return d;
}

inline bool is_pure(const SimplicialComplex& c) {
  if (c.is_void()) return true;
  const int s = c.facets().front().size();
  return std::all_of(c.facets().begin(), c.facets().end(), [s](VertexSet f) { return f.size() == s; });
}

/// Facets are the complements of the independent k-sets of g; void when there are none.
inline SimplicialComplex delta_kt(const Graph& g, int k) {
  if (k < 1 || k > g.n()) {
    throw std::invalid_argument("k must lie in 1..n, got k=" + std::to_string(k) + " n=" + std::to_string(g.n()));
  }
  std::vector<VertexSet> facets;
  for (auto s : independent_sets(g, k)) facets.push_back(g.vertices() - s);
  if (facets.empty()) return SimplicialComplex::void_complex(g.n());
  return SimplicialComplex::from_facets(g.n(), std::move(facets));
}

inline SimplicialComplex clique_complex(const Graph& g) {
  return SimplicialComplex::from_facets(g.n(), maximal_cliques(g));
}

/// Squarefree monomials, each given by its support; kept as a sorted antichain.
class MonomialSet {
 public:
  MonomialSet() = default;
  explicit MonomialSet(std::vector<VertexSet> supports) : gens_(detail::minimal_sets(std::move(supports))) {}

  const std::vector<VertexSet>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  /// Number of generators of each degree (index = degree).
  std::vector<std::int64_t> degree_counts() const {
    std::vector<std::int64_t> out;
    for (auto g : gens_) {
      const auto d = static_cast<std::size_t>(g.size());
      if (out.size() <= d) out.resize(d + 1, 0);
      ++out[d];
    }
    return out;
  }

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  std::vector<VertexSet> gens_;
};

namespace detail {

// Minimal transversals of `edges` (Berge's incremental algorithm).
inline std::vector<VertexSet> minimal_transversals(std::vector<VertexSet> edges) {
  std::sort(edges.begin(), edges.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  std::vector<VertexSet> current{VertexSet{}};
  for (auto e : edges) {
    std::vector<VertexSet> next;
    for (auto t : current) {
      if (t.intersects(e)) {
        next.push_back(t);
      } else {
        for (int v : e) next.push_back(t.with(v));
      }
    }
    current = minimal_sets(std::move(next));
  }
  return current;
}

}  // namespace detail

/// Minimal non-faces of c: the minimal generators of its Stanley-Reisner ideal.
inline MonomialSet minimal_nonfaces(const SimplicialComplex& c) {
  if (c.is_void()) throw VoidComplexError("minimal_nonfaces");
  std::vector<VertexSet> complements;
  for (auto f : c.facets()) complements.push_back(c.ground_set() - f);
  return MonomialSet(detail::minimal_transversals(std::move(complements)));
}

/// Dual facets are the complements of the minimal non-faces.
inline SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  if (c.is_void()) return SimplicialComplex::simplex(c.ground());
  const auto nonfaces = minimal_nonfaces(c);
  if (nonfaces.empty()) return SimplicialComplex::void_complex(c.ground());
  std::vector<VertexSet> facets;
  for (auto m : nonfaces.generators()) facets.push_back(c.ground_set() - m);
  return SimplicialComplex::from_facets(c.ground(), std::move(facets));
}

/**
 * Generators of the Stanley-Reisner ideal of the Alexander dual, read off the
 * facets: one monomial per facet complement. The full simplex contributes the
 * unit monomial, which is omitted.
 */
inline MonomialSet dual_ideal_generators(const SimplicialComplex& c) {
  if (c.is_void()) throw VoidComplexError("dual_ideal_generators");
  std::vector<VertexSet> gens;
  for (auto f : c.facets()) {
    const auto comp = c.ground_set() - f;
    if (!comp.empty()) gens.push_back(comp);
  }
  return MonomialSet(std::move(gens));
}

/**
 * Membership bitmap over all 2^n subsets of the ground set.
 *
 * Built by expanding the power set of every facet; n is bounded by Limits.
 */
class FaceTable {
 public:
  explicit FaceTable(const SimplicialComplex& c, const Limits& limits = {}) : n_(c.ground()) {
    if (n_ > limits.max_face_ground && !limits.allow_large) {
      throw GuardError("face table on ground set of size " + std::to_string(n_) + " exceeds bound " +
                           std::to_string(limits.max_face_ground),
                       "--allow-large");
    }
    if (n_ > 32) throw GuardError("face table limited to 32 ground vertices", "a smaller instance");
    bits_.assign((std::size_t{1} << n_) / 64 + 1, 0);
    for (auto f : c.facets()) {
      const Mask full = f.bits();
      Mask s = full;
      while (true) {
        set(s);
        if (s == 0) break;
        s = (s - 1) & full;
      }
    }
  }

  int ground() const { return n_; }
  bool contains(Mask s) const { return (bits_[s >> 6] >> (s & 63)) & 1u; }

 private:
  void set(Mask s) { bits_[s >> 6] |= std::uint64_t{1} << (s & 63); }

  int n_;
  std::vector<std::uint64_t> bits_;
};

/// Faces grouped by cardinality; each bucket sorted by bitmask value.
struct FaceBuckets {
  std::vector<std::vector<Mask>> by_size;

  std::int64_t count(int size) const {
    return size >= 0 && static_cast<std::size_t>(size) < by_size.size()
               ? static_cast<std::int64_t>(by_size[static_cast<std::size_t>(size)].size())
               : 0;
  }
};

/// Faces of the table lying inside `within`.
inline FaceBuckets faces_within(const FaceTable& table, Mask within) {
  FaceBuckets out;
  std::vector<Mask> all;
  Mask s = within;
  while (true) {
    if (table.contains(s)) all.push_back(s);
    if (s == 0) break;
    s = (s - 1) & within;
  }
  std::reverse(all.begin(), all.end());
  for (auto f : all) {
    const auto k = static_cast<std::size_t>(std::popcount(f));
    if (out.by_size.size() <= k) out.by_size.resize(k + 1);
    out.by_size[k].push_back(f);
  }
  return out;
}

inline FVector f_vector(const SimplicialComplex& c, const Limits& limits = {}) {
  if (c.is_void()) return FVector{};
  std::vector<std::int64_t> counts(static_cast<std::size_t>(dimension(c) + 2), 0);
  if (c.ground() <= limits.max_face_ground && c.ground() <= 32) {
    FaceTable table(c, limits);
    Mask s = c.support().bits();
    while (true) {
      if (table.contains(s)) ++counts[static_cast<std::size_t>(std::popcount(s))];
      if (s == 0) break;
      s = (s - 1) & c.support().bits();
    }
    return FVector(std::move(counts));
  }
  if (!limits.allow_large) {
    throw GuardError("f-vector on ground set of size " + std::to_string(c.ground()) + " exceeds bound " +
                         std::to_string(limits.max_face_ground),
                     "--allow-large");
  }
  std::unordered_set<Mask> seen;
  for (auto f : c.facets()) {
    const Mask full = f.bits();
    Mask s = full;
    while (true) {
      if (seen.insert(s).second) ++counts[static_cast<std::size_t>(std::popcount(s))];
      if (s == 0) break;
      s = (s - 1) & full;
    }
  }
  return FVector(std::move(counts));
}

/// f-vector of the Alexander dual on ground set n: h_i = C(n, i+1) - f_{n-i-2}.
inline FVector dual_fvector(const FVector& f, int n) {
  std::vector<std::int64_t> h;
  for (int i = -1; i <= n - 1; ++i) h.push_back(binomial(n, i + 1) - f.at(n - i - 2));
  return FVector(std::move(h));
}

/// All faces of dimension <= i.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int i) {
  if (i < -1) throw std::invalid_argument("skeleton dimension must be >= -1");
  if (c.is_void()) return c;
  std::vector<VertexSet> gens;
  for (auto f : c.facets()) {
    if (f.size() <= i + 1) {
      gens.push_back(f);
      continue;
    }
    for (auto sub : k_subsets(f.size(), i + 1)) gens.push_back(expand(sub, f));
  }
  return SimplicialComplex::from_facets(c.ground(), std::move(gens));
}

namespace detail {

// Link and deletion on raw facet lists, labels unchanged.
inline std::vector<VertexSet> link_facets(const std::vector<VertexSet>& facets, VertexSet sigma) {
  std::vector<VertexSet> out;
  for (auto f : facets)
    if (sigma.subset_of(f)) out.push_back(f - sigma);
  return maximal_sets(std::move(out));
}

inline std::vector<VertexSet> deletion_facets(const std::vector<VertexSet>& facets, VertexSet sigma) {
  std::vector<VertexSet> out;
  for (auto f : facets) {
    if (!sigma.subset_of(f)) {
      out.push_back(f);
    } else {
      for (int s : sigma) out.push_back(f.without(s));
    }
  }
  return maximal_sets(std::move(out));
}

}  // namespace detail

/// lk(sigma) = {tau : tau disjoint from sigma, tau | sigma a face}, relabeled onto 1..n-|sigma|.
inline SimplicialComplex link(const SimplicialComplex& c, VertexSet sigma) {
  if (!c.contains(sigma) || !sigma.subset_of(c.ground_set())) {
    throw std::invalid_argument("link: " + sigma.to_string() + " is not a face");
  }
  const VertexSet keep = c.ground_set() - sigma;
  std::vector<VertexSet> gens;
  for (auto f : detail::link_facets(c.facets(), sigma)) gens.push_back(compress(f, keep));
  return SimplicialComplex::from_facets(keep.size(), std::move(gens));
}

/**
 * del(sigma) = {tau : sigma not contained in tau}. Deleting a single vertex
 * drops it from the ground set (relabeling the rest); larger sigma keep n.
 */
inline SimplicialComplex deletion(const SimplicialComplex& c, VertexSet sigma) {
  if (!sigma.subset_of(c.ground_set())) throw std::invalid_argument("deletion: set outside ground set");
  if (c.is_void() || sigma.empty()) return SimplicialComplex::void_complex(c.ground() - (sigma.size() == 1 ? 1 : 0));
  auto facets = detail::deletion_facets(c.facets(), sigma);
  if (sigma.size() != 1) return SimplicialComplex::from_facets(c.ground(), std::move(facets));
  const VertexSet keep = c.ground_set() - sigma;
  for (auto& f : facets) f = compress(f, keep);
  return SimplicialComplex::from_facets(keep.size(), std::move(facets));
}

/// Join on the disjoint union of ground sets; b's labels are shifted past a's.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int n = a.ground() + b.ground();
  if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(n);
  std::vector<VertexSet> gens;
  for (auto fa : a.facets())
    for (auto fb : b.facets()) gens.push_back(fa | shift(fb, a.ground()));
  return SimplicialComplex::from_facets(n, std::move(gens));
}

}  // namespace srlab
