#include <gtest/gtest.h>

#include <random>

#include "srlab/homology.hpp"
#include "srlab/linalg.hpp"
#include "test_support.hpp"

using namespace srlab;
using srlab::testing::family;
using srlab::testing::sets;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

// Minimal triangulation of the real projective plane (6 vertices, 10 triangles).
SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(6, sets({{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 5, 6},
                                                 {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}}));
}

}  // namespace

TEST(Field, Parse) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("GF(2)").characteristic(), 2u);
  EXPECT_EQ(Field::parse("7").tag(), "GF(7)");
  EXPECT_THROW(Field::parse("GF(4)"), std::invalid_argument);
  EXPECT_THROW(Field::parse("R"), std::invalid_argument);
}

TEST(Linalg, DenseRanks) {
  IntMatrix a(3, 3);
  const int v[3][3] = {{2, 4, 6}, {1, 3, 5}, {1, 1, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = v[r][c];
  EXPECT_EQ(linalg::rank_bareiss(a), 2);
  EXPECT_EQ(linalg::rank_mod_p(a, 2), 1);
  EXPECT_EQ(linalg::rank_mod_p(a, 3), 2);
}

TEST(BoundaryMatrix, Examples) {
  const auto edge = SimplicialComplex::simplex(2);
  const auto d1 = boundary_matrix(edge, 1);
  ASSERT_EQ(d1.rows(), 2u);
  ASSERT_EQ(d1.cols(), 1u);
  EXPECT_EQ(d1(0, 0) * d1(1, 0), -1);
  const auto tri = SimplicialComplex::simplex(3);
  EXPECT_TRUE((boundary_matrix(tri, 1) * boundary_matrix(tri, 2)).is_zero());
  const auto d0 = boundary_matrix(tri, 0);
  EXPECT_EQ(d0.rows(), 1u);
  EXPECT_EQ(d0.cols(), 3u);
  EXPECT_THROW(boundary_matrix(tri, 3), std::out_of_range);
  EXPECT_THROW(boundary_matrix(SimplicialComplex::void_complex(2), 0), VoidComplexError);
}

TEST(BoundaryMatrix, SquaresToZero) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = srlab::testing::random_complex(rng, 3 + trial % 6);
    for (int i = 1; i <= dimension(c); ++i) EXPECT_TRUE((boundary_matrix(c, i - 1) * boundary_matrix(c, i)).is_zero());
  }
}

TEST(Homology, Examples) {
  const auto c4 = clique_complex(family(Family::C, 4));
  EXPECT_EQ(reduced_homology_dims(c4, Q).dims, (std::vector<std::int64_t>{0, 0, 1}));
  const auto two_points = SimplicialComplex::from_facets(2, sets({{1}, {2}}));
  EXPECT_EQ(reduced_homology_dims(two_points, Q).at(0), 1);
  EXPECT_TRUE(reduced_homology_dims(SimplicialComplex::simplex(5), F2).acyclic());
  EXPECT_EQ(reduced_homology_dims(SimplicialComplex::irrelevant(3), Q).at(-1), 1);
  const auto oct = clique_complex(family(Family::C2, 6));
  EXPECT_EQ(reduced_homology_dims(oct, Q).at(2), 1);
  EXPECT_THROW(reduced_homology_dims(SimplicialComplex::void_complex(3), Q), VoidComplexError);
}

TEST(Homology, FieldDependence) {
  const auto p = rp2();
  EXPECT_TRUE(reduced_homology_dims(p, Q).acyclic());
  EXPECT_TRUE(reduced_homology_dims(p, F3).acyclic());
  const auto h2 = reduced_homology_dims(p, F2);
  EXPECT_EQ(h2.at(1), 1);
  EXPECT_EQ(h2.at(2), 1);
}

TEST(Homology, SparseMatchesDense) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = srlab::testing::random_complex(rng, 1 + trial % 9);
    for (const auto& field : {Q, F2, F3}) {
      EXPECT_EQ(reduced_homology_dims(c, field).dims, srlab::testing::dense_reduced_homology(c, field));
    }
  }
}

TEST(Homology, EulerCharacteristic) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = srlab::testing::random_complex(rng, 2 + trial % 8);
    const auto f = f_vector(c);
    const auto h = reduced_homology_dims(c, Q);
    std::int64_t chi_f = 0, chi_h = 0;
    for (int i = -1; i <= f.top(); ++i) chi_f += (i % 2 == 0 ? 1 : -1) * f.at(i);
    for (int i = -1; i <= f.top(); ++i) chi_h += (i % 2 == 0 ? 1 : -1) * h.at(i);
    EXPECT_EQ(chi_f, chi_h);
  }
}

TEST(Homology, SpheresAndJoins) {
  for (int n = 2; n <= 9; ++n) {
    const auto sphere = skeleton(SimplicialComplex::simplex(n), n - 2);
    const auto h = reduced_homology_dims(sphere, Q);
    for (int i = -1; i <= n - 2; ++i) EXPECT_EQ(h.at(i), i == n - 2 ? 1 : 0);
  }
  // Suspension shifts homology by one.
  const auto s0 = SimplicialComplex::from_facets(2, sets({{1}, {2}}));
  const auto c = clique_complex(family(Family::C2, 7));
  const auto hc = reduced_homology_dims(c, Q);
  const auto hs = reduced_homology_dims(join(s0, c), Q);
  for (int i = -1; i <= 3; ++i) EXPECT_EQ(hs.at(i + 1), hc.at(i));
}

TEST(InducedSubcomplex, Examples) {
  const auto c4 = clique_complex(family(Family::C, 4));
  const auto r = induced_subcomplex(c4, VertexSet::of({1, 3}));
  EXPECT_EQ(r.ground(), 2);
  EXPECT_EQ(r.facets(), sets({{1}, {2}}));
  const auto e = induced_subcomplex(c4, VertexSet{});
  EXPECT_EQ(e.ground(), 0);
  EXPECT_TRUE(e.is_irrelevant());
}
