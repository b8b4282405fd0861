#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sternkit/error.hpp"
#include "sternkit/sequences.hpp"

using namespace sternkit;

namespace {

Polynomial from_list(const std::vector<long long>& cs) {
    std::vector<mpz_class> v;
    for (long long c : cs) v.emplace_back(static_cast<long>(c));
    return Polynomial(std::move(v));
}

}  // namespace

TEST(Stern, FirstTerms) {
    const std::vector<long> expected{0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3,
                                     4, 1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3};
    for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(stern(n), expected[n]) << n;
}

TEST(Twisted, FirstTerms) {
    const std::vector<long> expected{0, 1, -1, 0, 1, 1, 0, -1, -1, -2, -1, -1, 0,
                                     1, 1,  2, 1, 3, 2, 3, 1, 2, 1, 1, 0, -1};
    for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(twisted(n), expected[n]) << n;
}

TEST(Stern, MatchesForwardTable) {
    const auto s = oracle::stern_table(1 << 14);
    const auto t = oracle::twisted_table(1 << 14);
    for (std::uint64_t n = 0; n < s.size(); ++n) {
        ASSERT_EQ(stern(n), static_cast<long>(s[n])) << n;
        ASSERT_EQ(twisted(n), static_cast<long>(t[n])) << n;
    }
}

TEST(Stern, DigitScanAgreesWithMemo) {
    for (std::uint64_t n = 0; n < 5000; ++n) {
        ASSERT_EQ(stern_by_digits(n), stern(n));
        ASSERT_EQ(twisted_by_digits(n), twisted(n));
    }
    const std::uint64_t big = 0xDEADBEEFCAFEULL;
    EXPECT_EQ(stern_by_digits(big), stern(big));
    EXPECT_EQ(twisted_by_digits(big), twisted(big));
}

TEST(Stern, LargeArgumentsStayExact) {
    // s(2^k - 1) = k; s of the word (10)^(k-1)1 is the Fibonacci number F(2k).
    EXPECT_EQ(stern((std::uint64_t{1} << 63) - 1), 63);
    std::uint64_t alt = 0;
    for (int i = 0; i < 32; ++i) alt = alt << 2 | 1;  // 0101...01
    mpz_class fib;
    mpz_fib_ui(fib.get_mpz_t(), 64);
    EXPECT_EQ(stern(alt), fib);
}

TEST(SequenceCache, ValuesAndSize) {
    SequenceCache cache(SequenceKind::twisted);
    EXPECT_EQ(cache.value(9), -2);
    EXPECT_GT(cache.size(), 0u);
    EXPECT_EQ(cache.kind(), SequenceKind::twisted);
}

TEST(BinaryWord, RoundTrip) {
    EXPECT_EQ(BinaryWord::of(0).bits, std::vector<std::uint8_t>{0});
    EXPECT_EQ(BinaryWord::of(11).bits, (std::vector<std::uint8_t>{1, 0, 1, 1}));
    for (std::uint64_t n = 0; n < 300; ++n) EXPECT_EQ(BinaryWord::of(n).value(), n);
}

TEST(Admissible, ElevenHasFiveSubsequences) {
    EXPECT_EQ(count_admissible(11), 5);
    EXPECT_EQ(enumerate_admissible(11).size(), 5u);
}

TEST(Admissible, CountMatchesBruteForceAndStern) {
    for (std::uint64_t n = 0; n < 2048; ++n) {
        const auto [s, se] = oracle::weighted_brute(n);
        long long total = 0;
        for (long long c : s) total += c;
        ASSERT_EQ(count_admissible(n), static_cast<long>(total)) << n;
        ASSERT_EQ(count_admissible(n), stern(n)) << n;
    }
}

TEST(Admissible, EnumeratedPositionsAreDistinctAdmissibleWords) {
    for (std::uint64_t n : {11ull, 45ull, 1000ull, 4095ull}) {
        const auto word = oracle::binary(n);
        const auto sets = enumerate_admissible(n);
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(sets.size())), stern(n));
        std::set<PositionSet> unique(sets.begin(), sets.end());
        EXPECT_EQ(unique.size(), sets.size());
        for (const auto& ps : sets) {
            std::string sub;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                if (i) {
                    ASSERT_LT(ps[i], ps[i - 1]);
                }
                sub += word[word.size() - 1 - ps[i]];
            }
            EXPECT_GE(oracle::admissible_weight(sub), 0) << sub;
        }
    }
}

TEST(Admissible, GuardRejectsLongWords) {
    EXPECT_THROW(enumerate_admissible(std::uint64_t{1} << 30), InputTooLarge);
    EXPECT_THROW(enumerate_admissible(255, 4), InputTooLarge);
    EXPECT_THROW(weighted_count_direct(std::uint64_t{1} << 40), InputTooLarge);
}

TEST(Weighted, ElevenIsThreePlusTwoW) {
    EXPECT_EQ(weighted_stern(11), (Polynomial{3, 2}));
    EXPECT_EQ(weighted_stern(11).to_string('w'), "3+2*w");
}

TEST(Weighted, InitialValues) {
    EXPECT_TRUE(weighted_stern(0).is_zero());
    EXPECT_EQ(weighted_stern(1), Polynomial{1});
    EXPECT_EQ(weighted_even(0), Polynomial{1});
    EXPECT_EQ(weighted_even(1), Polynomial{1});
}

TEST(Weighted, ThreeComputationsAgreeWithBruteForce) {
    for (std::uint64_t n = 0; n < 1024; ++n) {
        const auto [s, se] = oracle::weighted_brute(n);
        const Polynomial direct_s = from_list(s), direct_se = from_list(se);
        ASSERT_EQ(weighted_stern(n), direct_s) << n;
        ASSERT_EQ(weighted_even(n), direct_se) << n;
        ASSERT_EQ(weighted_stern_alt(n), direct_s) << n;
        const auto [cs, cse] = weighted_count_direct(n);
        ASSERT_EQ(cs, direct_s) << n;
        ASSERT_EQ(cse, direct_se) << n;
    }
}

TEST(Weighted, SpecializesToStern) {
    for (std::uint64_t n = 0; n < 4096; ++n) {
        ASSERT_EQ(weighted_stern(n).evaluate(1), stern(n)) << n;
        ASSERT_TRUE(weighted_stern(n).has_nonnegative_coefficients());
    }
}

TEST(Weighted, RecursionsHold) {
    const Polynomial w = Polynomial::variable();
    for (std::uint64_t n = 1; n < 2048; ++n) {
        ASSERT_EQ(weighted_stern(2 * n), weighted_stern(n));
        ASSERT_EQ(weighted_stern(2 * n + 1), weighted_stern(n) + weighted_even(n));
        ASSERT_EQ(weighted_even(2 * n), w * weighted_stern(n) + weighted_even(n));
        ASSERT_EQ(weighted_even(2 * n + 1), weighted_even(n));
    }
}

TEST(Valuation, V2AndParity) {
    EXPECT_THROW(v2(0), DomainError);
    for (std::uint64_t n = 1; n < 5000; ++n) ASSERT_EQ(v2(n), oracle::v2(n));
    const auto s = oracle::stern_table(3000);
    for (std::uint64_t n = 0; n < s.size(); ++n) {
        ASSERT_EQ(mod2(n), static_cast<int>(s[n] & 1)) << n;
        ASSERT_EQ(mod2(n), n % 3 == 0 ? 0 : 1);
    }
}

TEST(Valuation, PowerPredicates) {
    EXPECT_FALSE(is_power_of_two(0));
    EXPECT_TRUE(is_power_of_two(1));
    EXPECT_TRUE(is_power_of_two(1024));
    EXPECT_FALSE(is_power_of_two(12));
    EXPECT_FALSE(is_three_times_power_of_two(0));
    EXPECT_TRUE(is_three_times_power_of_two(3));
    EXPECT_TRUE(is_three_times_power_of_two(96));
    EXPECT_FALSE(is_three_times_power_of_two(9));
    EXPECT_FALSE(is_three_times_power_of_two(1));
}
