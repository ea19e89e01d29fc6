#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "srlab/cache.hpp"
#include "srlab/io.hpp"
#include "srlab/report.hpp"
#include "test_support.hpp"

using namespace srlab;
using srlab::testing::family;
using srlab::testing::sets;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("srlab-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Io, ComplexRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto c = srlab::testing::random_complex(rng, 1 + i % 8);
    const auto back = io::complex_from_json(io::json::parse(io::canonical(c)));
    EXPECT_EQ(back, c);
    EXPECT_EQ(io::canonical(back), io::canonical(c));
  }
  const auto v = SimplicialComplex::void_complex(3);
  EXPECT_EQ(io::canonical(v), R"({"facets":[],"n":3,"void":true})");
  EXPECT_TRUE(io::complex_from_json(io::json::parse(io::canonical(v))).is_void());
  EXPECT_EQ(io::complex_from_json(io::json::parse(io::canonical(SimplicialComplex::irrelevant(2)))),
            SimplicialComplex::irrelevant(2));
}

TEST(Io, CanonicalIgnoresFacetOrder) {
  const auto a = SimplicialComplex::from_facets(4, sets({{3, 4}, {1, 2}}));
  const auto b = SimplicialComplex::from_facets(4, sets({{1, 2}, {3, 4}, {2}}));
  EXPECT_EQ(io::canonical(a), io::canonical(b));
}

TEST(Io, ComplexErrors) {
  EXPECT_THROW(io::complex_from_json(io::json::parse(R"({"n":3})")), std::invalid_argument);
  EXPECT_THROW(io::complex_from_json(io::json::parse(R"({"n":3,"facets":[]})")), std::invalid_argument);
  EXPECT_THROW(io::complex_from_json(io::json::parse(R"({"n":3,"facets":[[1]],"void":true})")), std::invalid_argument);
  EXPECT_THROW(io::complex_from_json(io::json::parse(R"({"n":2,"facets":[[1,3]]})")), std::invalid_argument);
}

TEST(Io, GraphFormats) {
  const auto g = io::graph_from_json(io::json::parse(R"({"n":4,"edges":[[1,2],[2,3],[3,4],[4,1]]})"));
  EXPECT_EQ(g, family(Family::C, 4));
  EXPECT_EQ(io::graph_from_json(io::json::parse(R"({"family":"C2","n":9})")), family(Family::C2, 9));
  EXPECT_EQ(io::graph_from_json(io::json::parse(R"({"family":"Kmn","n":3,"m":2})")), family(Family::Kmn, 3, 2));
  EXPECT_EQ(io::graph_from_json(io::graph_to_json(g)), g);
  EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"edges":[]})")), std::invalid_argument);
  EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"family":"Q","n":3})")), std::invalid_argument);
  EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n":3,"edges":[[1,2,3]]})")), std::invalid_argument);
}

TEST(Io, BettiAndHilbertRoundTrip) {
  const auto c = delta_kt(family(Family::C2, 6), 2);
  for (const auto& f : {Q, F2}) {
    const auto t = betti_hochster(c, f);
    EXPECT_EQ(io::betti_from_json(io::betti_to_json(t)), t);
  }
  const auto h = hilbert_from_fvector(f_vector(c), c.ground());
  EXPECT_EQ(io::hilbert_from_json(io::hilbert_to_json(h)), h);
}

TEST(Io, HashIsStable) {
  EXPECT_EQ(io::hex(io::fnv1a("")), "cbf29ce484222325");
  EXPECT_EQ(io::hex(io::fnv1a("a")), "af63dc4c8601ec8c");
}

TEST(Cache, BettiRoundTripAndMiss) {
  const auto dir = fresh_dir("betti");
  DiskCache cache(dir);
  const auto c = delta_kt(family(Family::L2, 7), 2);
  EXPECT_FALSE(cache.get_betti(c, Q));
  const auto t = betti_hochster(c, Q);
  cache.put_betti(c, Q, t);
  EXPECT_EQ(*cache.get_betti(c, Q), t);
  EXPECT_FALSE(cache.get_betti(c, F2));
  EXPECT_FALSE(cache.get("other", "key"));
  std::filesystem::remove_all(dir);
}

TEST(Cache, StoredKeyMismatchIsAMiss) {
  const auto dir = fresh_dir("collide");
  DiskCache cache(dir);
  cache.put("k", "one", io::json(1));
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(entry.path());
    out << R"({"kind":"k","key":"two","value":2})";
  }
  EXPECT_FALSE(cache.get("k", "one"));
  std::filesystem::remove_all(dir);
}

TEST(Report, CachedAndFreshAreByteIdentical) {
  const auto dir = fresh_dir("report");
  std::optional<DiskCache> cache(DiskCache{dir});
  for (const auto& c : {delta_kt(family(Family::C2, 6), 2), clique_complex(family(Family::L2, 8)),
                        SimplicialComplex::simplex(4), SimplicialComplex::irrelevant(3)}) {
    for (const auto& f : {Q, F2}) {
      const auto fresh = invariants_report(c, f).dump();
      const auto first = invariants_report(c, f, {}, cache).dump();
      const auto second = invariants_report(c, f, {}, cache).dump();
      EXPECT_EQ(fresh, first);
      EXPECT_EQ(fresh, second);
    }
  }
  std::filesystem::remove_all(dir);
}

TEST(Report, OctahedronDual) {
  const auto r = invariants_report(delta_kt(family(Family::C2, 6), 2), Q);
  EXPECT_EQ(r["linear"]["degree"], 3);
  EXPECT_FALSE(r["cohenMacaulay"]["reisner"].get<bool>());
  EXPECT_FALSE(r["cohenMacaulay"]["auslanderBuchsbaum"].get<bool>());
  EXPECT_TRUE(r["cohenMacaulay"].contains("witness"));
  EXPECT_EQ(r["bettiTotals"], io::json({1, 8, 12, 6, 1}));
  EXPECT_EQ(r["fVector"], io::json({1, 6, 15, 12, 3}));
}

TEST(Report, FullSimplexIsTrivial) {
  const auto r = invariants_report(SimplicialComplex::simplex(3), Q);
  EXPECT_EQ(r["bettiTotals"], io::json({1}));
  EXPECT_EQ(r["projectiveDimension"], 0);
  EXPECT_TRUE(r["cohenMacaulay"]["reisner"].get<bool>());
  EXPECT_TRUE(r["gorenstein"].get<bool>());
  EXPECT_TRUE(r["fatForest"]["verdict"].get<bool>());
  EXPECT_EQ(r["hilbertReduced"]["denomPower"], 3);
}

TEST(Report, GuardedStructureIsSkipped) {
  const auto c = delta_kt(family(Family::C, 9), 2);
  const auto r = invariants_report(c, Q);
  EXPECT_TRUE(r["shellable"]["skipped"].get<bool>());
  EXPECT_EQ(r["shellable"]["flag"], "--allow-large");
  EXPECT_THROW(invariants_report(SimplicialComplex::void_complex(2), Q), VoidComplexError);
}

TEST(Report, ThreadCountDoesNotChangeReport) {
  const auto c = delta_kt(family(Family::C2, 9), 3);
  InvariantOptions one{1, false}, many{4, false};
  const auto a = invariants_report(c, Q, one);
  EXPECT_EQ(a.dump(), invariants_report(c, Q, many).dump());
  EXPECT_EQ(a["bettiTotals"], io::json({1, 27, 81, 108, 81, 36, 9, 1}));
}
