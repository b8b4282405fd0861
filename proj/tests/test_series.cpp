#include <bit>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sternkit/error.hpp"
#include "sternkit/sequences.hpp"
#include "sternkit/series.hpp"

using namespace sternkit;

namespace {

IntSeries ints(std::vector<long> cs, std::size_t order) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntSeries(std::move(v), order);
}

IntSeries random_series(std::mt19937& rng, std::size_t order, bool unit_lead) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<mpz_class> v(order + 1);
    for (auto& c : v) c = d(rng);
    if (unit_lead) v[0] = rng() % 2 ? 1 : -1;
    return IntSeries(std::move(v), order);
}

}  // namespace

TEST(Series, ConstructionAndAccess) {
    const IntSeries a = ints({1, 2, 3}, 5);
    EXPECT_EQ(a.order(), 5u);
    EXPECT_EQ(a[4], 0);
    EXPECT_THROW(a[6], RangeError);
    EXPECT_EQ(ints({1, 2, 3}, 1).order(), 1u);
    EXPECT_THROW(IntSeries::from_coefficients({}), PreconditionError);
    EXPECT_EQ(ints({0, 0, 7}, 4).valuation(), 2u);
    EXPECT_FALSE(IntSeries(3).valuation());
}

TEST(Series, TruncationNeverPromotes) {
    const IntSeries a = ints({1, 1}, 10), b = ints({1, 1}, 4);
    EXPECT_EQ((a * b).order(), 4u);
    EXPECT_EQ((a + b).order(), 4u);
    EXPECT_THROW(b.truncate(5), PreconditionError);
    EXPECT_EQ(a.truncate(3).order(), 3u);
}

TEST(Series, MultiplicationMatchesNaiveConvolution) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const IntSeries a = random_series(rng, 30, false), b = random_series(rng, 30, false);
        const auto p = a * b;
        for (std::size_t n = 0; n <= 30; ++n) {
            mpz_class acc = 0;
            for (std::size_t i = 0; i <= n; ++i) acc += a[i] * b[n - i];
            ASSERT_EQ(p[n], acc);
        }
    }
}

TEST(Series, DivisionInvertsMultiplication) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const IntSeries a = random_series(rng, 40, false), b = random_series(rng, 40, true);
        EXPECT_TRUE(div_exact(a * b, b).identical(a));
    }
}

TEST(Series, DivisionByPositiveValuation) {
    const IntSeries num = shift_up(ints({2, 3, 4}, 6), 2);
    const IntSeries den = shift_up(ints({1, 1}, 6), 2);
    const IntSeries q = div_exact(num, den);
    EXPECT_EQ(q.order(), 6u);
    EXPECT_TRUE((q * ints({1, 1}, 6)).identical(ints({2, 3, 4}, 6)));
    EXPECT_THROW(div_exact(ints({1, 1}, 6), den), DivisionError);
}

TEST(Series, DivisionRespectsTheRing) {
    const IntSeries num = ints({1}, 4), den = ints({2, 1}, 4);
    EXPECT_THROW(div_exact(num, den), DivisionError);
    const RatSeries q = div_exact(to_rational(num), to_rational(den));
    EXPECT_EQ(q[1], mpq_class(-1, 4));
    EXPECT_THROW(to_integer(q), DivisionError);
    EXPECT_THROW(div_exact(num, IntSeries(4)), DivisionError);
}

TEST(Series, SubstitutePowerAndSections) {
    const IntSeries a = ints({1, 2, 3}, 2);
    const IntSeries b = substitute_power(a, 3, 100);
    EXPECT_EQ(b.order(), 8u);
    EXPECT_TRUE(b.identical(ints({1, 0, 0, 2, 0, 0, 3, 0, 0}, 8)));
    const IntSeries s = stern_series(40);
    const IntSeries even = section(s, 0, 2), odd = section(s, 1, 2);
    for (std::size_t n = 0; n <= even.order(); ++n) EXPECT_EQ(even[n], stern(n));
    for (std::size_t n = 0; n <= odd.order(); ++n) EXPECT_EQ(odd[n], stern(n) + stern(n + 1));
    EXPECT_THROW(section(s, 2, 2), RangeError);
    EXPECT_THROW(section(ints({1}, 0), 1, 2), RangeError);
}

TEST(Series, LogDerivative) {
    // (1 - z)^{-1} has logarithmic derivative 1/(1 - z).
    const IntSeries geo = div_exact(IntSeries::constant(1, 10), ints({1, -1}, 10));
    const IntSeries ld = log_derivative(geo);
    EXPECT_EQ(ld.order(), 9u);
    for (std::size_t n = 0; n <= 9; ++n) EXPECT_EQ(ld[n], 1);
    EXPECT_THROW(log_derivative(ints({2, 1}, 5)), DivisionError);
    const auto shifted = log_derivative_shifted(shift_up(geo, 3));
    EXPECT_EQ(shifted.valuation, 3u);
    EXPECT_TRUE(shifted.unit_part == ld);
}

TEST(Series, TextAndJson) {
    EXPECT_EQ(to_text(ints({1, 0, -2, 1}, 3)), "1 - 2*z^2 + z^3 + O(z^4)");
    EXPECT_EQ(to_text(IntSeries(2)), "0 + O(z^3)");
    const IntSeries a = ints({5, -3, 0, 12}, 3);
    const auto j = to_json(a);
    EXPECT_EQ(j.dump(), R"(["5","-3","0","12"])");
    EXPECT_TRUE(series_from_json<mpz_class>(j).identical(a));
    const RatSeries r = to_rational(a);
    EXPECT_TRUE(series_from_json<mpq_class>(to_json(r)).identical(r));
}

TEST(Series, WeightSeriesArithmetic) {
    const Polynomial w = Polynomial::variable();
    const WeightSeries a({Polynomial{1}, w}, 4);
    const WeightSeries inv = div_exact(WeightSeries::constant(Polynomial{1}, 4), a);
    EXPECT_EQ(inv[3], -(w * w * w));
    EXPECT_EQ(to_text(a), "1 + w*z + O(z^5)");
    const WeightSeries b({Polynomial{0, -2}, Polynomial{1, 1}}, 1);
    EXPECT_EQ(to_text(b), "-2*w + (1+w)*z + O(z^2)");
}

TEST(Products, ThueMorseSigns) {
    const IntSeries tm = infinite_product(Polynomial{1, -1}, 2, 2047);
    for (std::uint64_t n = 0; n < 2048; ++n) {
        ASSERT_EQ(tm[n], std::popcount(n) % 2 == 0 ? 1 : -1) << n;
    }
}

TEST(Products, CarlitzIdentity) {
    const IntSeries prod = infinite_product(Polynomial{1, 1, 1}, 2, 1023);
    EXPECT_TRUE(shift_up(prod, 1).truncate(1023).identical(stern_series(1023)));
    EXPECT_THROW(infinite_product(Polynomial{2, 1}, 2, 10), PreconditionError);
    EXPECT_THROW(infinite_product(Polynomial{1, 1}, 1, 10), PreconditionError);
}

TEST(Products, BinaryPartitionsViaGeometricFactors) {
    // prod 1/(1 - z^(2^m)) against the coin-change oracle.
    const auto b = oracle::binary_partitions(512);
    IntSeries prod = IntSeries::constant(1, 511);
    for (std::size_t p = 1; p < 512; p *= 2) {
        std::vector<mpz_class> geo(512, 0);
        for (std::size_t i = 0; i < 512; i += p) geo[i] = 1;
        prod = prod * IntSeries(std::move(geo), 511);
    }
    for (std::size_t n = 0; n < 512; ++n) ASSERT_EQ(prod[n], static_cast<long>(b[n]));
}

TEST(Psi, ThreeComputationsAgree) {
    for (unsigned e = 0; e <= 7; ++e) {
        const Polynomial p = psi_from_sequence(e);
        EXPECT_EQ(psi_first_factorization(e), p) << e;
        EXPECT_EQ(psi_second_factorization(e), p) << e;
        EXPECT_EQ(psi(e), p);
    }
}

TEST(Psi, PalindromicWithNonnegativeCoefficients) {
    for (unsigned e = 0; e <= 8; ++e) {
        const Polynomial p = psi(e);
        const std::size_t length = 3 * (std::size_t{1} << e) + 1;
        EXPECT_EQ(p.degree(), static_cast<long>(length) - 2);
        EXPECT_TRUE(p.is_palindromic(length));
        EXPECT_TRUE(p.has_nonnegative_coefficients());
        if (e >= 1) EXPECT_EQ(p.coeff(3 * (std::size_t{1} << e) / 2), 2);
    }
}

TEST(Psi, FirstRowsFromTable) {
    // (-1)^e t(3*2^e + n), n = 0..3*2^e, from the forward table.
    const auto t = oracle::twisted_table(400);
    for (unsigned e = 0; e <= 5; ++e) {
        const std::size_t base = 3 * (std::size_t{1} << e);
        const Polynomial p = psi(e);
        for (std::size_t n = 0; n <= base; ++n) {
            const long long v = (e % 2 ? -1 : 1) * t[base + n];
            ASSERT_EQ(p.coeff(n), static_cast<long>(v)) << e << ' ' << n;
        }
    }
}

TEST(Twisted, SeriesExpansionMatchesSequence) {
    EXPECT_TRUE(twisted_series_expansion(1024).identical(twisted_series(1024)));
}
