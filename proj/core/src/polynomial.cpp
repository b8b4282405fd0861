#include "sternkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sternkit {

Polynomial::Polynomial(std::initializer_list<mpz_class> coeffs) : coeffs_(coeffs) {
    normalize();
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial Polynomial::constant(const mpz_class& c) {
    return Polynomial(std::vector<mpz_class>{c});
}

Polynomial Polynomial::monomial(const mpz_class& c, std::size_t degree) {
    std::vector<mpz_class> cs(degree + 1);
    cs[degree] = c;
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

mpz_class Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class Polynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::substitute_power(std::size_t k) const {
    if (is_zero() || k == 1) return *this;
    std::vector<mpz_class> out((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (exponent != 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent != 0) base *= base;
    }
    return result;
}

bool Polynomial::is_palindromic(std::size_t length) const {
    if (coeffs_.size() > length) return false;
    for (std::size_t i = 0; i < length; ++i) {
        if (coeff(i) != coeff(length - 1 - i)) return false;
    }
    return true;
}

bool Polynomial::has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) >= 0; });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] != 0) support.push_back(j);
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j : support) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

std::string Polynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (sgn(c) < 0) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

}  // namespace sternkit
