#include <gtest/gtest.h>

#include <set>

#include "srlab/claims.hpp"

using namespace srlab;
using namespace srlab::claims;

namespace {

const std::vector<ClaimReport>& all_reports() {
  static const std::vector<ClaimReport> r = [] {
    Oracle oracle;
    return verify_all(oracle);
  }();
  return r;
}

}  // namespace

TEST(Catalog, IdsUniqueAndSorted) {
  const auto& c = catalog();
  EXPECT_GE(c.size(), 15u);
  std::set<std::string> ids;
  for (const auto& r : c) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_FALSE(r.locator.empty()) << r.id;
    EXPECT_FALSE(r.oracle.empty()) << r.id;
  }
  EXPECT_TRUE(std::is_sorted(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST(Catalog, ConflictLinksAreSymmetric) {
  for (const auto& r : catalog()) {
    for (const auto& other : r.conflicts_with) {
      const auto& o = find_claim(other);
      EXPECT_NE(std::find(o.conflicts_with.begin(), o.conflicts_with.end(), r.id), o.conflicts_with.end())
          << r.id << " -> " << other;
    }
  }
}

TEST(Catalog, UnknownIdThrows) { EXPECT_THROW(find_claim("no.such"), std::invalid_argument); }

TEST(Verify, StatusesMatchExpectations) {
  for (const auto& r : all_reports()) {
    EXPECT_EQ(status_name(r.status), status_name(r.expected)) << r.id << ": " << r.detail << "\n"
                                                              << suite_to_text({r});
  }
  EXPECT_EQ(exit_code(all_reports()), 0);
}

TEST(Verify, EveryReportHasChecksOverBothFields) {
  for (const auto& r : all_reports()) {
    EXPECT_GT(r.checks.size(), 0u) << r.id;
    EXPECT_EQ(r.fields, (std::vector<std::string>{"Q", "GF(2)"})) << r.id;
  }
}

TEST(Verify, RefutedRecordsCarryLocalizedMismatches) {
  for (const auto& r : all_reports()) {
    if (r.status != Status::Refuted) continue;
    ASSERT_FALSE(r.mismatches().empty()) << r.id;
    for (const auto& m : r.mismatches()) {
      EXPECT_NE(m.stated, m.oracle) << r.id;
      EXPECT_FALSE(m.instance.empty());
    }
  }
}

TEST(Verify, K44ExampleHasNoDiscrepancies) {
  const auto r = verify_claim("k44.example");
  EXPECT_EQ(r.status, Status::Confirmed);
  EXPECT_TRUE(discrepancy_report({r}).empty());
}

TEST(Verify, ParameterOverridesAndValidation) {
  Params p;
  p.nmin = 5;
  p.nmax = 5;
  const auto r = verify_claim("tree.theorem", p);
  EXPECT_EQ(r.range.nmin, 5);
  EXPECT_EQ(r.range.nmax, 5);
  EXPECT_EQ(r.status, Status::Confirmed);
  Params bad;
  bad.nmin = 7;
  bad.nmax = 6;
  EXPECT_THROW(verify_claim("tree.theorem", bad), std::invalid_argument);
}

TEST(Verify, GuardOnLargeInstances) {
  Params p;
  p.nmin = 17;
  p.nmax = 17;
  EXPECT_THROW(verify_claim("pn.theorem", p), GuardError);
}

TEST(Verify, SingleFieldRun) {
  VerifyOptions opts;
  opts.fields = {Field::prime(3)};
  const auto r = verify_claim("sn.theorem", {}, opts);
  EXPECT_EQ(r.fields, (std::vector<std::string>{"GF(3)"}));
  EXPECT_EQ(r.status, Status::Confirmed);
}

TEST(Verify, ThreadCountDoesNotChangeReports) {
  HochsterOptions one;
  one.threads = 1;
  HochsterOptions many;
  many.threads = 4;
  Oracle a(one), b(many);
  for (const auto* id : {"c2n.theorem", "k44.example", "grid.theorem"}) {
    const auto ra = report_to_json(verify_claim(id, {}, a), true);
    const auto rb = report_to_json(verify_claim(id, {}, b), true);
    EXPECT_EQ(ra.dump(), rb.dump()) << id;
  }
}

TEST(Verify, DiscrepancyReportIsSorted) {
  const auto d = discrepancy_report(all_reports());
  ASSERT_FALSE(d.empty());
  for (std::size_t i = 1; i < d.size(); ++i) {
    const auto key = [](const io::json& j) {
      return std::make_tuple(j["claim"].get<std::string>(), j["instance"].get<std::string>(),
                             j["quantity"].get<std::string>(), j["field"].get<std::string>());
    };
    EXPECT_LE(key(d[i - 1]), key(d[i]));
  }
}

TEST(Verify, SuiteJsonIsDeterministic) {
  Oracle o;
  const auto a = suite_to_json(verify_all(o)).dump();
  EXPECT_EQ(a, suite_to_json(all_reports()).dump());
}

TEST(Scan, LnHoldsOnSmallRange) {
  Oracle o;
  const auto r = scan_conjecture_Ln(1, 3, 9, o);
  EXPECT_TRUE(r.holds_on_range());
  ASSERT_FALSE(r.notes.empty());
  for (const auto& c : r.cells) {
    EXPECT_GE(c.n, 2 * c.k - 1);
    EXPECT_FALSE(c.void_complex);
  }
  const auto text = scan_to_text(r);
  EXPECT_NE(text.find("holds on the whole range"), std::string::npos);
}

TEST(Scan, L2nMarksVoidCells) {
  Oracle o;
  const auto r = scan_conjecture_L2n(1, 3, 8, o);
  EXPECT_TRUE(r.holds_on_range());
  bool saw_void = false;
  for (const auto& c : r.cells) saw_void |= c.void_complex;
  EXPECT_TRUE(saw_void);
  const auto j = scan_to_json(r);
  EXPECT_TRUE(j["holdsOnRange"].get<bool>());
  EXPECT_TRUE(j["firstCounterexample"].is_null());
}

TEST(Scan, Guard) {
  Oracle o;
  EXPECT_THROW(scan_conjecture_Ln(1, 2, 17, o), GuardError);
  EXPECT_THROW(scan_conjecture_Ln(3, 2, 10, o), std::invalid_argument);
}
