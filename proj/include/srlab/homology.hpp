#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "srlab/complex.hpp"
#include "srlab/field.hpp"
#include "srlab/linalg.hpp"

namespace srlab {

/// Reduced homology dimensions (dim H~_{-1}, dim H~_0, ..., dim H~_d) over a field.
struct HomologyProfile {
  std::vector<std::int64_t> dims;
  Field field = Field::rationals();

  /// dim H~_i; zero outside the stored range.
  std::int64_t at(int i) const {
    const auto idx = static_cast<std::size_t>(i + 1);
    return (i < -1 || idx >= dims.size()) ? 0 : dims[idx];
  }
  bool acyclic() const {
    for (auto d : dims)
      if (d != 0) return false;
    return true;
  }

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

namespace detail {

/// Reduced homology of a downward-closed face set; entry s is dim H~_{s-1}.
inline std::vector<std::int64_t> homology_of_buckets(const FaceBuckets& faces, const Field& field) {
  const auto ranks = linalg::boundary_ranks(faces, field);
  const std::size_t sizes = faces.by_size.size();
  std::vector<std::int64_t> dims(sizes, 0);
  for (std::size_t s = 0; s < sizes; ++s) {
    const std::int64_t in = s < ranks.size() ? ranks[s] : 0;
    const std::int64_t out = s + 1 < ranks.size() ? ranks[s + 1] : 0;
    dims[s] = static_cast<std::int64_t>(faces.by_size[s].size()) - in - out;
  }
  return dims;
}

inline FaceBuckets all_faces(const SimplicialComplex& c, const Limits& limits = {}) {
  FaceTable table(c, limits);
  return faces_within(table, c.support().bits());
}

}  // namespace detail

/**
 * Matrix of the boundary map from i-faces (columns) to (i-1)-faces (rows).
 *
 * Faces are ordered by ascending bitmask; the coefficient of the face with
 * the k-th smallest vertex removed is (-1)^k. i = 0 gives the augmentation row.
 */
inline IntMatrix boundary_matrix(const SimplicialComplex& c, int i) {
  if (c.is_void()) throw VoidComplexError("boundary_matrix");
  if (i < -1 || i > dimension(c)) {
    throw std::out_of_range("boundary_matrix: dimension " + std::to_string(i) + " outside -1.." +
                            std::to_string(dimension(c)));
  }
  const auto faces = detail::all_faces(c);
  if (i == -1) return IntMatrix(0, faces.by_size[0].size());
  return linalg::boundary_matrix_from_buckets(faces, i + 1);
}

inline HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const Field& field) {
  if (c.is_void()) throw VoidComplexError("reduced_homology_dims");
  return HomologyProfile{detail::homology_of_buckets(detail::all_faces(c), field), field};
}

/// Restriction to the faces inside W, relabeled order-preservingly onto 1..|W|.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& c, VertexSet w) {
  if (!w.subset_of(c.ground_set())) throw std::invalid_argument("induced_subcomplex: W outside ground set");
  if (c.is_void()) return SimplicialComplex::void_complex(w.size());
  std::vector<VertexSet> gens;
  for (auto f : c.facets()) gens.push_back(compress(f & w, w));
  return SimplicialComplex::from_facets(w.size(), std::move(gens));
}

}  // namespace srlab
