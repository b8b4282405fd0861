#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "sternkit/error.hpp"
#include "sternkit/polynomial.hpp"
#include "sternkit/ring.hpp"

namespace sternkit {

/// Formal power series known exactly up to and including z^order.
///
/// Arithmetic never promotes the order: a result is only as precise as its
/// least precise operand. Operands over different rings do not mix; that is a
/// compile-time type error.
template <ExactRing R>
class Series {
public:
    using value_type = R;
    using traits = ring_traits<R>;

    explicit Series(std::size_t order) : coeffs_(order + 1, traits::zero()) {}

    /// Pads with zeros or drops coefficients past `order`.
    Series(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, traits::zero());
    }

    /// Order is the last index of `coeffs`.
    static Series from_coefficients(std::vector<R> coeffs) {
        if (coeffs.empty()) throw PreconditionError("a series needs at least one coefficient");
        const std::size_t order = coeffs.size() - 1;
        return Series(std::move(coeffs), order);
    }

    static Series constant(const R& c, std::size_t order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static Series from_polynomial(const Polynomial& p, std::size_t order)
        requires std::same_as<R, mpz_class>
    {
        Series s(order);
        const auto& cs = p.coefficients();
        for (std::size_t i = 0; i < cs.size() && i <= order; ++i) s.coeffs_[i] = cs[i];
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const R& operator[](std::size_t i) const {
        if (i > order()) {
            throw RangeError("coefficient " + std::to_string(i) + " beyond truncation order " +
                             std::to_string(order()));
        }
        return coeffs_[i];
    }

    std::span<const R> coefficients() const noexcept { return coeffs_; }

    /// Index of the first nonzero coefficient, if any is known.
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!traits::is_zero(coeffs_[i])) return i;
        }
        return std::nullopt;
    }

    Series truncate(std::size_t new_order) const {
        if (new_order > order()) {
            throw PreconditionError("cannot raise truncation order from " + std::to_string(order()) + " to " +
                                    std::to_string(new_order));
        }
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
    }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (traits::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (traits::is_zero(b.coeffs_[j])) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend Series operator*(const R& c, const Series& a) {
        Series r = a;
        for (auto& x : r.coeffs_) x = R(c * x);
        return r;
    }

    /// Coefficient-wise comparison up to the smaller of the two orders.
    friend bool operator==(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + n + 1, b.coeffs_.begin());
    }

    /// Same order and same coefficients.
    bool identical(const Series& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<R> coeffs_;
};

using IntSeries = Series<mpz_class>;
using RatSeries = Series<mpq_class>;
using WeightSeries = Series<Polynomial>;

/// Multiplication by z^shift. The result is exact one coefficient further per
/// shifted position, so its order grows by `shift`.
template <ExactRing R>
Series<R> shift_up(const Series<R>& a, std::size_t shift) {
    std::vector<R> cs(a.order() + shift + 1, ring_traits<R>::zero());
    for (std::size_t i = 0; i <= a.order(); ++i) cs[i + shift] = a[i];
    return Series<R>(std::move(cs), a.order() + shift);
}

/// Division by z^shift; the low coefficients must vanish.
template <ExactRing R>
Series<R> shift_down(const Series<R>& a, std::size_t shift) {
    if (shift > a.order()) throw DivisionError("shift exceeds truncation order");
    for (std::size_t i = 0; i < shift; ++i) {
        if (!ring_traits<R>::is_zero(a[i])) throw DivisionError("series not divisible by z^" + std::to_string(shift));
    }
    std::vector<R> cs(a.coefficients().begin() + shift, a.coefficients().end());
    return Series<R>::from_coefficients(std::move(cs));
}

/// Exact quotient q with q*den = num, known to order min(num, den) - val(den).
template <ExactRing R>
Series<R> div_exact(const Series<R>& num, const Series<R>& den) {
    using T = ring_traits<R>;
    const auto v = den.valuation();
    if (!v) throw DivisionError("division by a series with no known nonzero coefficient");
    const std::size_t common = std::min(num.order(), den.order());
    if (*v > common) throw DivisionError("denominator valuation exceeds truncation order");
    for (std::size_t i = 0; i < *v; ++i) {
        if (!T::is_zero(num[i])) throw DivisionError("numerator valuation is below denominator valuation");
    }
    const R& lead = den[*v];
    if (!T::is_unit(lead)) {
        throw DivisionError("lowest coefficient " + T::to_string(lead) + " of the denominator is not a unit in the " +
                            std::string(T::name) + " ring");
    }
    const R inv = T::unit_inverse(lead);
    const std::size_t q_order = common - *v;
    std::vector<R> q(q_order + 1, T::zero());
    const auto n = num.coefficients();
    const auto d = den.coefficients();
    for (std::size_t m = 0; m <= q_order; ++m) {
        R acc = n[m + *v];
        for (std::size_t j = 0; j < m; ++j) {
            const R& dj = d[m + *v - j];
            if (T::is_zero(dj) || T::is_zero(q[j])) continue;
            acc -= q[j] * dj;
        }
        q[m] = acc * inv;
    }
    return Series<R>(std::move(q), q_order);
}

/// a(z^k), exact up to min(order, k*a.order() + k - 1).
template <ExactRing R>
Series<R> substitute_power(const Series<R>& a, std::size_t k, std::size_t order) {
    if (k == 0) throw PreconditionError("substitution power must be positive");
    const std::size_t known = k * a.order() + (k - 1);
    const std::size_t n = std::min(order, known);
    std::vector<R> cs(n + 1, ring_traits<R>::zero());
    for (std::size_t i = 0; i * k <= n; ++i) cs[i * k] = a[i];
    return Series<R>(std::move(cs), n);
}

template <ExactRing R>
Series<R> derivative(const Series<R>& a) {
    if (a.order() == 0) throw PreconditionError("derivative of an order-0 series carries no information");
    std::vector<R> cs(a.order());
    for (std::size_t i = 1; i <= a.order(); ++i) cs[i - 1] = R(a[i] * ring_traits<R>::from_int(static_cast<long>(i)));
    return Series<R>(std::move(cs), a.order() - 1);
}

/// a'/a for a series whose constant term is a unit; order drops by one.
template <ExactRing R>
Series<R> log_derivative(const Series<R>& a) {
    if (a.order() == 0) throw PreconditionError("log derivative needs order >= 1");
    if (!ring_traits<R>::is_unit(a[0])) {
        throw DivisionError("constant term " + ring_traits<R>::to_string(a[0]) + " is not a unit");
    }
    return div_exact(derivative(a), a.truncate(a.order() - 1));
}

template <ExactRing R>
struct ShiftedLogDerivative {
    std::size_t valuation;  ///< v in a = z^v u
    Series<R> unit_part;    ///< u'/u
};

/// For a = z^v u with u(0) a unit, returns v and u'/u; a'/a = v/z + u'/u.
template <ExactRing R>
ShiftedLogDerivative<R> log_derivative_shifted(const Series<R>& a) {
    const auto v = a.valuation();
    if (!v) throw DivisionError("log derivative of the zero series");
    return {*v, log_derivative(shift_down(a, *v))};
}

/// n -> a(r + n k), with order floor((order - r) / k).
template <ExactRing R>
Series<R> section(const Series<R>& a, std::size_t r, std::size_t k) {
    if (k < 2) throw PreconditionError("section base must be at least 2");
    if (r >= k) throw RangeError("section residue " + std::to_string(r) + " not below base " + std::to_string(k));
    if (r > a.order()) throw RangeError("section residue beyond truncation order");
    const std::size_t n = (a.order() - r) / k;
    std::vector<R> cs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) cs[i] = a[r + i * k];
    return Series<R>(std::move(cs), n);
}

/// Canonical text "c0 + c1*z + c2*z^2 + ... + O(z^(N+1))"; zero terms are omitted.
template <ExactRing R>
std::string to_text(const Series<R>& a, char var = 'z') {
    using T = ring_traits<R>;
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i <= a.order(); ++i) {
        const R& c = a[i];
        if (T::is_zero(c)) continue;
        const int sg = T::sign(c);
        std::string body = sg < 0 ? T::to_string(R(-c)) : T::to_string(c);
        if (T::compound(c)) body = "(" + body + ")";
        if (first) {
            if (sg < 0) os << '-';
        } else {
            os << (sg < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << body;
            continue;
        }
        if (body != "1") os << body << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    os << " + O(" << var << '^' << (a.order() + 1) << ')';
    return os.str();
}

/// JSON array of exact coefficients (decimal strings for integers).
template <ExactRing R>
nlohmann::json to_json(const Series<R>& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : a.coefficients()) arr.push_back(ring_traits<R>::to_json(c));
    return arr;
}

template <ExactRing R>
Series<R> series_from_json(const nlohmann::json& arr) {
    std::vector<R> cs;
    for (const auto& c : arr) cs.push_back(ring_traits<R>::from_json(c));
    return Series<R>::from_coefficients(std::move(cs));
}

/// Integer series from a rational one; throws when a coefficient is not integral.
IntSeries to_integer(const RatSeries& a);
RatSeries to_rational(const IntSeries& a);

/// sum_{n <= order} s(n) z^n
IntSeries stern_series(std::size_t order);
/// sum_{n <= order} t(n) z^n
IntSeries twisted_series(std::size_t order);
/// sum_{n <= order} s(n + 1) z^n
IntSeries shifted_stern_series(std::size_t order);

/// prod_{m : k^m <= order} P(z^(k^m)), truncated at `order`. Requires P(0) = 1.
IntSeries infinite_product(const Polynomial& p, std::size_t k, std::size_t order);

/// The palindromic polynomial (-1)^e sum_{n=0}^{3*2^e} t(3*2^e + n) z^n read
/// off the twisted sequence.
Polynomial psi_from_sequence(unsigned e);
/// z (1+z^(2^e)) (1+z+z^2)^e prod_{n=0}^{e-2} (1 - z^(2^n) + z^(2^(n+1)))^(e-1-n)
Polynomial psi_first_factorization(unsigned e);
/// z (1+z^(2^e)) prod_{n=0}^{e-1} (1 + z^(2^n) + z^(2^(n+1)))
Polynomial psi_second_factorization(unsigned e);
/// Computes all three forms, throws InvariantViolation unless they coincide.
Polynomial psi(unsigned e);

/// z - z^2 + sum_e (-1)^e z^(3*2^e+1) (1+z^(2^e)) prod_{n<e} (1 + z^(2^n) + z^(2^(n+1))),
/// truncated at `order`.
IntSeries twisted_series_expansion(std::size_t order);

}  // namespace sternkit
