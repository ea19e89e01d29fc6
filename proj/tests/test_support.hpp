#pragma once

// Brute-force oracles and fixtures shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/graph.hpp"
#include "srlab/homology.hpp"
#include "srlab/linalg.hpp"
#include "srlab/resolution.hpp"

namespace srlab::testing {

inline Graph family(Family f, int n, int m = 0) { return build_family(FamilySpec{f, n, m, {}}); }

inline std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) out.push_back(VertexSet{s});
  return out;
}

/// Faces by definition: subsets contained in some facet.
inline std::vector<VertexSet> brute_faces(const SimplicialComplex& c) {
  std::vector<VertexSet> out;
  for (auto s : all_subsets(c.ground()))
    if (c.contains(s)) out.push_back(s);
  return out;
}

inline std::vector<std::int64_t> brute_fvector(const SimplicialComplex& c) {
  std::vector<std::int64_t> f;
  for (auto s : brute_faces(c)) {
    const auto k = static_cast<std::size_t>(s.size());
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

/// {F : [n] \ F is not a face}, reduced to maximal sets.
inline SimplicialComplex brute_dual(const SimplicialComplex& c) {
  std::vector<VertexSet> faces;
  const VertexSet full = c.ground_set();
  for (auto s : all_subsets(c.ground()))
    if (!c.contains(full - s)) faces.push_back(s);
  if (faces.empty()) return SimplicialComplex::void_complex(c.ground());
  return SimplicialComplex::from_facets(c.ground(), faces);
}

inline std::vector<VertexSet> brute_minimal_nonfaces(const SimplicialComplex& c) {
  std::vector<VertexSet> out;
  for (auto s : all_subsets(c.ground())) {
    if (c.contains(s)) continue;
    bool minimal = true;
    for (int v : s)
      if (!c.contains(s.without(v))) minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  return out;
}

/// Reduced homology via dense boundary matrices of the whole complex.
inline std::vector<std::int64_t> dense_reduced_homology(const SimplicialComplex& c, const Field& field) {
  const int d = dimension(c);
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(d + 3), 0);
  for (int i = 0; i <= d; ++i) ranks[static_cast<std::size_t>(i + 1)] = linalg::dense_rank(boundary_matrix(c, i), field);
  const auto f = brute_fvector(c);
  std::vector<std::int64_t> dims;
  for (int i = -1; i <= d; ++i) {
    const auto s = static_cast<std::size_t>(i + 1);
    dims.push_back(f[s] - ranks[s] - ranks[s + 1]);
  }
  return dims;
}

/// Hochster's formula with no shortcuts: every W, dense ranks on the relabeled restriction.
inline BettiTable naive_hochster(const SimplicialComplex& c, const Field& field) {
  BettiTable t(field, c.ground());
  for (auto w : all_subsets(c.ground())) {
    const auto restricted = induced_subcomplex(c, w);
    const auto dims = dense_reduced_homology(restricted, field);
    for (std::size_t s = 0; s < dims.size(); ++s) t.add(w.size() - static_cast<int>(s), w.size(), dims[s]);
  }
  return t;
}

/// Random complex: a handful of random facets on n vertices.
inline SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<Mask> bits(0, (Mask{1} << n) - 1);
  std::vector<VertexSet> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(VertexSet{bits(rng)});
  return SimplicialComplex::from_facets(n, gens);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.4) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<VertexSet> sets(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<VertexSet> out;
  for (auto l : lists) out.push_back(VertexSet::of(l));
  return out;
}

}  // namespace srlab::testing
