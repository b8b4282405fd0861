#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sternkit {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficient i multiplies x^i. The stored list never ends in a zero, so the
/// zero polynomial has an empty coefficient list and degree -1. The same type
/// serves as the weight polynomials in the central variable w and as the
/// finite products in z; only the printed variable name differs.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<mpz_class> coeffs);
    explicit Polynomial(std::vector<mpz_class> coeffs);

    static Polynomial constant(const mpz_class& c);
    static Polynomial monomial(const mpz_class& c, std::size_t degree);
    /// The polynomial x.
    static Polynomial variable();

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    mpz_class coeff(std::size_t i) const;

    mpz_class evaluate(const mpz_class& x) const;
    Polynomial derivative() const;
    /// P(x^k).
    Polynomial substitute_power(std::size_t k) const;
    Polynomial pow(unsigned exponent) const;
    /// True when the coefficient list padded with zeros to `length` reads the
    /// same in both directions.
    bool is_palindromic(std::size_t length) const;
    bool has_nonnegative_coefficients() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const mpz_class& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const mpz_class& c) { return a *= c; }
    friend Polynomial operator*(const mpz_class& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Compact form such as "3+2*w" or "z^2-z^5"; "0" for the zero polynomial.
    std::string to_string(char var = 'w') const;

private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

using WeightPolynomial = Polynomial;
using DensePolynomial = Polynomial;

}  // namespace sternkit
