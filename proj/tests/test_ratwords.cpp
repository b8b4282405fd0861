#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sternkit/error.hpp"
#include "sternkit/ratwords.hpp"
#include "sternkit/sequences.hpp"

using namespace sternkit;

namespace {

std::vector<unsigned> letters(const std::string& w) {
    std::vector<unsigned> out;
    for (char c : w) out.push_back(static_cast<unsigned>(c - '0'));
    return out;
}

long count_factor(const std::string& word, const std::string& factor) {
    long c = 0;
    for (std::size_t i = 0; i + factor.size() <= word.size(); ++i) c += word.compare(i, factor.size(), factor) == 0;
    return c;
}

}  // namespace

TEST(Expansion, Digits) {
    EXPECT_EQ(expansion(0, 2), std::vector<unsigned>{0});
    EXPECT_EQ(expansion(11, 2), (std::vector<unsigned>{1, 0, 1, 1}));
    EXPECT_EQ(expansion(10, 3), (std::vector<unsigned>{1, 0, 1}));
}

TEST(Patterns, AdmissibleOnWords) {
    const auto rep = admissible_pattern(mpz_class(1));
    EXPECT_EQ(rep.evaluate(letters("1")), 1);
    EXPECT_EQ(rep.evaluate(letters("101")), 1);
    EXPECT_EQ(rep.evaluate(letters("10101")), 1);
    EXPECT_EQ(rep.evaluate(letters("11")), 0);
    EXPECT_EQ(rep.evaluate(letters("")), 0);
    EXPECT_EQ(subsequence_transform(rep).evaluate(letters("1011")), 5);
    EXPECT_THROW(rep.evaluate(letters("12")), RangeError);
}

TEST(Patterns, WeightedElevenIsThreePlusTwoW) {
    const auto rep = subsequence_transform(admissible_pattern(Polynomial::variable()));
    EXPECT_EQ(count_in_expansion(rep, 11, 2), (Polynomial{3, 2}));
}

TEST(Patterns, SubsequenceTransformGivesWeightedStern) {
    const auto s_rep = subsequence_transform(admissible_pattern(Polynomial::variable()));
    const auto se_rep = subsequence_transform(even_pattern(Polynomial::variable()));
    for (std::uint64_t n = 0; n < 1024; ++n) {
        const auto [s, se] = oracle::weighted_brute(n);
        std::vector<mpz_class> cs, cse;
        for (long long c : s) cs.emplace_back(static_cast<long>(c));
        for (long long c : se) cse.emplace_back(static_cast<long>(c));
        ASSERT_EQ(count_in_expansion(s_rep, n, 2), Polynomial(cs)) << n;
        ASSERT_EQ(count_in_expansion(se_rep, n, 2), Polynomial(cse)) << n;
    }
}

TEST(Patterns, UnweightedCountIsStern) {
    const auto rep = subsequence_transform(admissible_pattern(mpz_class(1)));
    for (std::uint64_t n = 0; n < 4096; ++n) ASSERT_EQ(count_in_expansion(rep, n, 2), stern(n));
}

TEST(Subfactor, CountsOccurrencesOfEleven) {
    const std::vector<unsigned> eleven{1, 1};
    const auto rep = subfactor_transform(word_indicator<mpz_class>(2, eleven));
    EXPECT_EQ(count_in_expansion(rep, 7, 2), 2);
    EXPECT_EQ(count_in_expansion(rep, 255, 2), 7);
    for (std::uint64_t n = 0; n < 2048; ++n) {
        ASSERT_EQ(count_in_expansion(rep, n, 2), count_factor(oracle::binary(n), "11")) << n;
    }
}

TEST(Subfactor, MatchesSumOverAllFactors) {
    // Random rational series on words of length <= 14, compared with the
    // explicit sum over all O(len^2) factors.
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t m = 2 + trial % 3;
        std::vector<mpz_class> init(m), final(m);
        std::vector<Matrix<mpz_class>> trans(2, Matrix<mpz_class>(m, m));
        for (auto& x : init) x = coeff(rng);
        for (auto& x : final) x = coeff(rng);
        for (auto& t : trans) {
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) t(i, j) = coeff(rng);
            }
        }
        const LinearRepresentation<mpz_class> rep(init, trans, final);
        const auto sub = subfactor_transform(rep);
        for (int w = 0; w < 20; ++w) {
            const std::size_t len = rng() % 15;
            std::vector<unsigned> word(len);
            for (auto& c : word) c = rng() % 2;
            mpz_class brute = 0;
            for (std::size_t i = 0; i <= len; ++i) {
                for (std::size_t j = i; j <= len; ++j) {
                    brute += rep.evaluate(std::span<const unsigned>(word).subspan(i, j - i));
                }
            }
            ASSERT_EQ(sub.evaluate(word), brute);
        }
    }
}

TEST(Subsequence, MatchesSumOverAllSubsequences) {
    std::mt19937 rng(99);
    const std::vector<unsigned> pattern{1, 0, 1};
    const auto rep = word_indicator<mpz_class>(2, pattern);
    const auto sub = subsequence_transform(rep);
    for (int w = 0; w < 50; ++w) {
        const std::size_t len = rng() % 12;
        std::vector<unsigned> word(len);
        for (auto& c : word) c = rng() % 2;
        long brute = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            std::vector<unsigned> picked;
            for (std::size_t i = 0; i < len; ++i) {
                if (mask >> i & 1) picked.push_back(word[i]);
            }
            brute += picked == pattern;
        }
        ASSERT_EQ(sub.evaluate(word), brute);
    }
}

TEST(Concatenation, ProductOfIndicators) {
    const std::vector<unsigned> a{1}, b{0, 1};
    const auto prod = concatenation_product(word_indicator<mpz_class>(2, a), word_indicator<mpz_class>(2, b));
    EXPECT_EQ(prod.evaluate(letters("101")), 1);
    EXPECT_EQ(prod.evaluate(letters("110")), 0);
    EXPECT_EQ(prod.evaluate(letters("1")), 0);
    EXPECT_THROW(concatenation_product(all_words<mpz_class>(2), all_words<mpz_class>(3)), PreconditionError);
}

TEST(LinearRepresentation, ShapeChecks) {
    EXPECT_THROW(LinearRepresentation<mpz_class>({1}, {}, {1}), PreconditionError);
    EXPECT_THROW(LinearRepresentation<mpz_class>({1, 0}, {Matrix<mpz_class>::identity(2)}, {1}), PreconditionError);
    EXPECT_THROW(LinearRepresentation<mpz_class>({1}, {Matrix<mpz_class>::identity(2)}, {1}), PreconditionError);
    EXPECT_THROW(count_in_expansion(admissible_pattern(mpz_class(1)), 5, 3), PreconditionError);
    EXPECT_THROW(count_in_expansion(admissible_pattern(mpz_class(1)), 5, 1), PreconditionError);
    const std::vector<unsigned> bad{2};
    EXPECT_THROW(word_indicator<mpz_class>(2, bad), RangeError);
}

TEST(LinearRepresentation, JsonRoundTrip) {
    const auto rep = subfactor_transform(admissible_pattern(Polynomial::variable()));
    const auto j = rep.to_json();
    EXPECT_EQ(LinearRepresentation<Polynomial>::from_json(j), rep);
    const auto ints = subsequence_transform(admissible_pattern(mpz_class(1)));
    EXPECT_EQ(LinearRepresentation<mpz_class>::from_json(ints.to_json()), ints);
    EXPECT_THROW(LinearRepresentation<mpz_class>::from_json(j), FormatError);
}
