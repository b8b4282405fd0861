#include "sternkit/series.hpp"

#include "sternkit/sequences.hpp"

namespace sternkit {

IntSeries to_integer(const RatSeries& a) {
    std::vector<mpz_class> cs;
    cs.reserve(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i].get_den() != 1) {
            throw DivisionError("coefficient " + std::to_string(i) + " = " + a[i].get_str() + " is not integral");
        }
        cs.push_back(a[i].get_num());
    }
    return IntSeries(std::move(cs), a.order());
}

RatSeries to_rational(const IntSeries& a) {
    std::vector<mpq_class> cs;
    cs.reserve(a.order() + 1);
    for (const auto& c : a.coefficients()) cs.emplace_back(c);
    return RatSeries(std::move(cs), a.order());
}

IntSeries stern_series(std::size_t order) {
    std::vector<mpz_class> cs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) cs[n] = stern(n);
    return IntSeries(std::move(cs), order);
}

IntSeries twisted_series(std::size_t order) {
    std::vector<mpz_class> cs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) cs[n] = twisted(n);
    return IntSeries(std::move(cs), order);
}

IntSeries shifted_stern_series(std::size_t order) {
    std::vector<mpz_class> cs(order + 1);
    for (std::size_t n = 0; n <= order; ++n) cs[n] = stern(n + 1);
    return IntSeries(std::move(cs), order);
}

namespace {

// acc <- acc * P(z^step), truncated to acc's length.
void multiply_sparse(std::vector<mpz_class>& acc, const Polynomial& p, std::size_t step) {
    const std::size_t n = acc.size();
    std::vector<mpz_class> out(n);
    const auto& pc = p.coefficients();
    for (std::size_t j = 0; j < pc.size(); ++j) {
        if (pc[j] == 0) continue;
        const std::size_t shift = j * step;
        if (shift >= n) break;
        for (std::size_t i = 0; i + shift < n; ++i) {
            if (acc[i] == 0) continue;
            mpz_addmul(out[i + shift].get_mpz_t(), pc[j].get_mpz_t(), acc[i].get_mpz_t());
        }
    }
    acc = std::move(out);
}

Polynomial one_plus_z_power(std::size_t power) { return Polynomial{1} + Polynomial::monomial(1, power); }

// 1 + sign*z^a + z^(2a)
Polynomial cyclotomic_like(std::size_t a, int sign) {
    return Polynomial{1} + Polynomial::monomial(sign, a) + Polynomial::monomial(1, 2 * a);
}

}  // namespace

IntSeries infinite_product(const Polynomial& p, std::size_t k, std::size_t order) {
    if (k < 2) throw PreconditionError("infinite product base must be at least 2");
    if (p.coeff(0) != 1) throw PreconditionError("infinite product needs P(0) = 1, got " + p.coeff(0).get_str());
    std::vector<mpz_class> acc(order + 1);
    acc[0] = 1;
    for (std::size_t step = 1; step <= order; step *= k) {
        multiply_sparse(acc, p, step);
        if (step > order / k) break;
    }
    return IntSeries(std::move(acc), order);
}

Polynomial psi_from_sequence(unsigned e) {
    const std::uint64_t base = std::uint64_t{3} << e;
    std::vector<mpz_class> cs(base + 1);
    for (std::uint64_t n = 0; n <= base; ++n) {
        cs[n] = twisted(base + n);
        if (e % 2 == 1) cs[n] = -cs[n];
    }
    return Polynomial(std::move(cs));
}

Polynomial psi_first_factorization(unsigned e) {
    Polynomial p = Polynomial::variable() * one_plus_z_power(std::size_t{1} << e);
    p *= Polynomial{1, 1, 1}.pow(e);
    for (unsigned n = 0; n + 2 <= e; ++n) {
        p *= cyclotomic_like(std::size_t{1} << n, -1).pow(e - 1 - n);
    }
    return p;
}

Polynomial psi_second_factorization(unsigned e) {
    Polynomial p = Polynomial::variable() * one_plus_z_power(std::size_t{1} << e);
    for (unsigned n = 0; n < e; ++n) p *= cyclotomic_like(std::size_t{1} << n, 1);
    return p;
}

Polynomial psi(unsigned e) {
    Polynomial a = psi_from_sequence(e);
    if (!(a == psi_first_factorization(e))) {
        throw InvariantViolation("psi_" + std::to_string(e) + ": first factorization disagrees with the sequence");
    }
    if (!(a == psi_second_factorization(e))) {
        throw InvariantViolation("psi_" + std::to_string(e) + ": second factorization disagrees with the sequence");
    }
    return a;
}

IntSeries twisted_series_expansion(std::size_t order) {
    std::vector<mpz_class> acc(order + 1);
    if (order >= 1) acc[1] = 1;
    if (order >= 2) acc[2] = -1;

    // running product prod_{n<e} (1 + z^(2^n) + z^(2^(n+1))), truncated at `order`
    std::vector<mpz_class> prod(order + 1);
    prod[0] = 1;
    for (unsigned e = 0;; ++e) {
        const std::size_t two_e = std::size_t{1} << e;
        const std::size_t lead = 3 * two_e + 1;
        if (lead > order) break;
        if (e > 0) multiply_sparse(prod, Polynomial{1, 1, 1}, two_e / 2);
        const bool negative = e % 2 == 1;
        for (std::size_t i = 0; lead + i <= order; ++i) {
            if (prod[i] == 0) continue;
            // (1 + z^(2^e)) contributes at i and i + 2^e
            for (std::size_t shift : {std::size_t{0}, two_e}) {
                const std::size_t idx = lead + i + shift;
                if (idx > order) continue;
                if (negative) {
                    acc[idx] -= prod[i];
                } else {
                    acc[idx] += prod[i];
                }
            }
        }
    }
    return IntSeries(std::move(acc), order);
}

}  // namespace sternkit
