#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sternkit/error.hpp"
#include "sternkit/verify.hpp"

using namespace sternkit;

TEST(Expr, EvaluatesClosedForms) {
    using namespace expr;
    const Expr f = s(pow2(e) + n) - s(pow2(e) - n) - s(n);
    EXPECT_EQ(f.evaluate(4, 3), 0);
    EXPECT_EQ(sign(e).evaluate(3, 0), -1);
    EXPECT_EQ((t(n) * 2 + 1).evaluate(0, 9), -3);
    EXPECT_EQ(v2(n).evaluate(0, 48), 4);
    EXPECT_EQ(mod(n, 3).evaluate(0, 10), 1);
    EXPECT_EQ(is_pow2(n).evaluate(0, 64), 1);
    EXPECT_EQ(equal(n, 1).evaluate(0, 2), 0);
    EXPECT_THROW(s(n - 5).evaluate(0, 2), DomainError);
    EXPECT_THROW(pow2(e - 1).evaluate(0, 0), DomainError);
    EXPECT_EQ(pow2(e - 1).evaluate(0, 0, true), 0);
    EXPECT_THROW(v2(n).evaluate(0, 0), DomainError);
    EXPECT_FALSE(f.to_string().empty());
}

TEST(Registry, IdsUniqueAndAnchored) {
    std::set<std::string> ids;
    for (const auto& rec : identity_registry()) {
        EXPECT_TRUE(ids.insert(rec.id).second) << rec.id;
        EXPECT_GE(rec.sides.size(), 2u);
        EXPECT_FALSE(rec.anchor.empty());
        EXPECT_FALSE(rec.printed_range.empty());
        EXPECT_FALSE(rec.statement().empty());
    }
    EXPECT_THROW(find_identity("NOPE"), LookupError);
    EXPECT_EQ(find_identity("ID7").status, IdentityStatus::suspected_typo);
    EXPECT_EQ(find_identity("ID3").status, IdentityStatus::suspected_typo);
    EXPECT_EQ(find_identity("STID-S").status, IdentityStatus::as_printed);
}

TEST(Registry, StatusStrings) {
    for (auto st : {IdentityStatus::as_printed, IdentityStatus::suspected_typo, IdentityStatus::corrected}) {
        EXPECT_EQ(identity_status_from_string(to_string(st)), st);
    }
    EXPECT_THROW(identity_status_from_string("maybe"), FormatError);
}

TEST(Identities, AsPrintedPassOnPrintedRanges) {
    for (const auto& rec : identity_registry()) {
        if (rec.id == "ID7") continue;
        const auto r = check_identity(rec.id, 9, RangePolicy::printed_range);
        EXPECT_TRUE(r.ok()) << rec.id;
        EXPECT_GT(r.swept, 0u) << rec.id;
        EXPECT_EQ(r.passed + r.failed, r.swept);
    }
}

TEST(Identities, SweepSizesFollowRanges) {
    // STID-S over 0 <= e <= 4, 0 <= n <= 2^e: sum of (2^e + 1).
    EXPECT_EQ(check_identity("STID-S", 4, RangePolicy::printed_range).swept, 2u + 3 + 5 + 9 + 17);
    // ID5 starts at e = 2 with 1 <= n <= 2^e.
    EXPECT_EQ(check_identity("ID5", 3, RangePolicy::printed_range).swept, 4u + 8);
    EXPECT_EQ(check_identity("ID5", 1, RangePolicy::printed_range).swept, 0u);
}

TEST(Identities, Id7AsPrintedFailsAtTwoOne) {
    const auto r = check_identity("ID7", 6, RangePolicy::printed_range);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.blocking_failure());
    EXPECT_EQ(r.status, "suspected-typo");
    bool found = false;
    for (const auto& cx : r.counterexamples) {
        if (cx.e == 2 && cx.n == 1) {
            found = true;
            EXPECT_EQ(cx.lhs, "3");   // s(5)
            EXPECT_EQ(cx.rhs, "-3");  // t(3) - 3 s(1)
        }
    }
    EXPECT_TRUE(found);
    EXPECT_LE(r.counterexamples.size(), VerificationReport::kMaxCounterexamples);
    EXPECT_TRUE(check_identity("ID7c", 12, RangePolicy::printed_range).ok());
}

TEST(Identities, Id3ScanStopsAtPowerOfTwo) {
    const auto r = check_identity("ID3", 8, RangePolicy::scan);
    EXPECT_FALSE(r.blocking_failure());
    ASSERT_EQ(r.scanned.size(), 9u);
    for (const auto& range : r.scanned) {
        EXPECT_FALSE(range.empty);
        EXPECT_EQ(range.lo, 0);
        EXPECT_EQ(range.hi, mpz_class(1) << static_cast<unsigned>(range.e)) << range.e;
        EXPECT_FALSE(range.capped);
    }
}

TEST(Identities, ScanOfValidIdentityHitsCapOrBoundary) {
    const auto r = check_identity("MF1", 5, RangePolicy::scan);
    EXPECT_FALSE(r.blocking_failure());
    for (const auto& range : r.scanned) {
        EXPECT_LE(range.lo, range.printed_lo);
        EXPECT_GE(range.hi, range.printed_hi);
    }
}

TEST(Identities, JobsDoNotChangeReports) {
    for (const char* id : {"STID-T3", "ID7", "REC-S"}) {
        const auto one = check_identity(id, 9, RangePolicy::printed_range, SweepOptions{1});
        const auto four = check_identity(id, 9, RangePolicy::printed_range, SweepOptions{4});
        EXPECT_EQ(one, four) << id;
    }
    const auto scan1 = check_identity("ID3", 7, RangePolicy::scan, SweepOptions{1});
    const auto scan3 = check_identity("ID3", 7, RangePolicy::scan, SweepOptions{3});
    EXPECT_EQ(scan1, scan3);
}

TEST(Report, JsonRoundTrip) {
    for (const auto& r : {check_identity("ID7", 5, RangePolicy::printed_range),
                          check_identity("ID3", 4, RangePolicy::scan), check_conjecture_gen(2, 64)}) {
        const auto back = VerificationReport::from_json(nlohmann::json::parse(r.to_json().dump()));
        EXPECT_EQ(back, r);
    }
    EXPECT_THROW(VerificationReport::from_json(nlohmann::json::object()), FormatError);
    auto j = check_identity("MF1", 2, RangePolicy::printed_range).to_json();
    j["passed"] = "0";
    EXPECT_THROW(VerificationReport::from_json(j), FormatError);
}

TEST(Report, RecordAndMergeKeepTallies) {
    VerificationReport a, b;
    for (int i = 0; i < 15; ++i) a.record(i % 2 == 0, Counterexample{0, i, "x", "y", ""});
    for (int i = 0; i < 5; ++i) b.record(false, Counterexample{1, i, "x", "y", ""});
    a.merge(b);
    EXPECT_EQ(a.swept, 20u);
    EXPECT_EQ(a.failed, 12u);
    EXPECT_EQ(a.passed + a.failed, a.swept);
    EXPECT_EQ(a.counterexamples.size(), 10u);
    EXPECT_EQ(a.counterexamples.front().n, 1);
    EXPECT_TRUE(a.blocking_failure());
    a.conjecture = true;
    EXPECT_FALSE(a.blocking_failure());
}

TEST(PartialSums, ClosedForms) {
    const auto r = check_partial_sums(12);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.swept, 13u * 4 - 1);
}

TEST(PartialSums, AgainstForwardTable) {
    const auto s = oracle::stern_table(1025);
    long long sum = 0;
    for (int n = 1; n <= 1024; ++n) sum += s[n];
    EXPECT_EQ(sum, (59049 + 1) / 2);  // (3^10 + 1) / 2
}

TEST(Determinants, ClosedFormAndFamilies) {
    EXPECT_EQ(det_M(1), -2);
    EXPECT_EQ(det_M(2), 2);
    EXPECT_THROW(det_M(0), RangeError);
    EXPECT_TRUE(check_det_M(1 << 12).ok());
    EXPECT_EQ(check_det_M(1 << 12).swept, (1u << 12) - 1);
    const auto fam = check_det_families(8);
    EXPECT_TRUE(fam.ok());
    EXPECT_EQ(matrix_families().size(), 4u);
}

TEST(Determinants, FamiliesAgainstTables) {
    const auto s = oracle::stern_table(1 << 12);
    for (unsigned e = 0; e <= 6; ++e) {
        const std::uint64_t p = std::uint64_t{1} << e;
        for (std::uint64_t n = 0; n < 2 * p; ++n) {
            const long long d = s[n] * s[p + n + 1] - s[n + 1] * s[p + n];
            ASSERT_EQ(d, n < p ? -1 : 1);
        }
    }
}

TEST(Divisibility, ThreeCaseLaw) {
    EXPECT_TRUE(check_divisibility(1 << 12).ok());
    EXPECT_THROW(check_divisibility(2), PreconditionError);
}

TEST(Palindrome, RowsAreSymmetric) { EXPECT_TRUE(check_palindrome(9).ok()); }

TEST(Conjectures, UCoefficientsAndIdentity) {
    const auto r = check_conjecture_gen(4, 256);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.conjecture);
    EXPECT_EQ(r.status, "conjecture");
    const IntSeries u = u_series(12);
    for (std::size_t i = 0; i < published_u_prefix().size(); ++i) EXPECT_EQ(u[i], published_u_prefix()[i]);
    EXPECT_THROW(check_conjecture_gen(6, 100), PreconditionError);
}

TEST(Conjectures, ABCoefficientsAndIdentities) {
    const auto r = check_conjecture_ab(4, 256);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.conjecture);
    const IntSeries a = a_series(10), b = b_series(10);
    for (std::size_t i = 0; i < published_a_prefix().size(); ++i) EXPECT_EQ(a[i], published_a_prefix()[i]);
    for (std::size_t i = 0; i < published_b_prefix().size(); ++i) EXPECT_EQ(b[i], published_b_prefix()[i]);
    EXPECT_THROW(check_conjecture_ab(8, 100), PreconditionError);
}

TEST(Suites, RunAndRender) {
    SuiteOptions opts;
    opts.max_e = 6;
    const auto reports = run_suite("all", opts);
    EXPECT_GT(reports.size(), 15u);
    for (const auto& r : reports) EXPECT_FALSE(r.blocking_failure()) << r.id;
    const std::string table = render_table(reports);
    EXPECT_NE(table.find("ID7"), std::string::npos);
    EXPECT_NE(table.find("suspected-typo"), std::string::npos);
    EXPECT_EQ(run_suite("mod2", opts).size(), 1u);
    EXPECT_THROW(run_suite("everything", opts), LookupError);
}
