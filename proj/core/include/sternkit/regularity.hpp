#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "sternkit/error.hpp"
#include "sternkit/polynomial.hpp"
#include "sternkit/ring.hpp"
#include "sternkit/series.hpp"

namespace sternkit {

/// Dense polynomial in z over R, index = power of z.
template <ExactRing R>
using ZPolynomial = std::vector<R>;

/// U_i(z) = A_i(z) + sum_j L_ij(z) U_j(z^k), with prescribed U_i(0) = alpha_i.
template <ExactRing R>
class AffineSystem {
public:
    using Forms = std::vector<std::vector<ZPolynomial<R>>>;

    /// Throws PreconditionError on shape mismatch or when the constants do not
    /// satisfy alpha_i = A_i(0) + L_i(alpha) mod z.
    AffineSystem(std::size_t k, std::vector<Series<R>> inhomogeneous, Forms forms, std::vector<R> constants)
        : k_(k), a_(std::move(inhomogeneous)), forms_(std::move(forms)), alpha_(std::move(constants)) {
        using T = ring_traits<R>;
        const std::size_t d = a_.size();
        if (k_ < 2) throw PreconditionError("affine system base must be at least 2");
        if (d == 0) throw PreconditionError("affine system needs at least one unknown");
        if (forms_.size() != d || alpha_.size() != d) throw PreconditionError("affine system shape mismatch");
        for (const auto& row : forms_) {
            if (row.size() != d) throw PreconditionError("linear form has wrong number of variables");
        }
        for (std::size_t i = 0; i < d; ++i) {
            R rhs = a_[i][0];
            for (std::size_t j = 0; j < d; ++j) {
                if (!forms_[i][j].empty()) rhs += forms_[i][j][0] * alpha_[j];
            }
            if (!(rhs == alpha_[i])) {
                throw PreconditionError("inconsistent constant for unknown " + std::to_string(i) + ": alpha = " +
                                        T::to_string(alpha_[i]) + " but A(0) + L(alpha) = " + T::to_string(rhs));
            }
        }
    }

    std::size_t base() const noexcept { return k_; }
    std::size_t dimension() const noexcept { return a_.size(); }
    const std::vector<Series<R>>& inhomogeneous() const noexcept { return a_; }
    const Forms& forms() const noexcept { return forms_; }
    const std::vector<R>& constants() const noexcept { return alpha_; }

    /// Largest z-degree among the nonzero coefficients of the linear forms; -1 if all vanish.
    long max_degree() const {
        long best = -1;
        for (const auto& row : forms_) {
            for (const auto& poly : row) {
                for (std::size_t p = poly.size(); p-- > 0;) {
                    if (!ring_traits<R>::is_zero(poly[p])) {
                        best = std::max(best, static_cast<long>(p));
                        break;
                    }
                }
            }
        }
        return best;
    }

private:
    std::size_t k_;
    std::vector<Series<R>> a_;
    Forms forms_;
    std::vector<R> alpha_;
};

namespace detail {

/// Smallest r with k^r >= n (0 for n <= 1).
inline std::size_t ceil_log(std::size_t k, std::size_t n) {
    std::size_t r = 0;
    for (std::size_t p = 1; p < n; ++r) {
        if (p > n / k) return r + 1;
        p *= k;
    }
    return r;
}

template <ExactRing R>
std::vector<Series<R>> affine_step(const AffineSystem<R>& sys, const std::vector<Series<R>>& u, std::size_t order) {
    const std::size_t d = sys.dimension();
    std::vector<Series<R>> substituted;
    substituted.reserve(d);
    for (const auto& uj : u) substituted.push_back(substitute_power(uj, sys.base(), order));
    std::vector<Series<R>> next;
    next.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<R> cs(sys.inhomogeneous()[i].coefficients().begin(),
                          sys.inhomogeneous()[i].coefficients().begin() + order + 1);
        for (std::size_t j = 0; j < d; ++j) {
            const auto& poly = sys.forms()[i][j];
            const auto sub = substituted[j].coefficients();
            for (std::size_t p = 0; p < poly.size() && p <= order; ++p) {
                if (ring_traits<R>::is_zero(poly[p])) continue;
                for (std::size_t n = 0; n + p <= order && n < sub.size(); ++n) {
                    if (ring_traits<R>::is_zero(sub[n])) continue;
                    cs[n + p] += poly[p] * sub[n];
                }
            }
        }
        next.emplace_back(std::move(cs), order);
    }
    return next;
}

}  // namespace detail

/// Unique solution of the system to order min(N, orders of the A_i), by
/// fixed-point iteration from the constants. Each round fixes every
/// coefficient below the next power of k; a final extra round must change
/// nothing or InvariantViolation is thrown.
template <ExactRing R>
std::vector<Series<R>> solve_affine_system(const AffineSystem<R>& sys, std::size_t order) {
    for (const auto& a : sys.inhomogeneous()) order = std::min(order, a.order());
    std::vector<Series<R>> u;
    for (const auto& c : sys.constants()) u.push_back(Series<R>::constant(c, order));
    const std::size_t rounds = detail::ceil_log(sys.base(), order) + 1;
    for (std::size_t r = 0; r < rounds; ++r) u = detail::affine_step(sys, u, order);
    const auto check = detail::affine_step(sys, u, order);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!check[i].identical(u[i])) throw InvariantViolation("fixed-point iteration did not stabilize");
    }
    return u;
}

/// One reduction step: adjoins z*A_i and z*U_i as new unknowns and rewrites
/// every term z^(k+p) U_j(z^k) as z^p U_(d+j)(z^k). Returns the system
/// unchanged when all form degrees are already below k.
template <ExactRing R>
AffineSystem<R> degree_reduce(const AffineSystem<R>& sys) {
    using T = ring_traits<R>;
    const std::size_t k = sys.base();
    if (sys.max_degree() < static_cast<long>(k)) return sys;
    const std::size_t d = sys.dimension();

    std::vector<Series<R>> a = sys.inhomogeneous();
    for (std::size_t i = 0; i < d; ++i) a.push_back(shift_up(sys.inhomogeneous()[i], 1));

    auto reduce_row = [&](const std::vector<ZPolynomial<R>>& row, std::size_t lift) {
        std::vector<ZPolynomial<R>> out(2 * d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto& poly = row[j];
            for (std::size_t p = 0; p < poly.size(); ++p) {
                if (T::is_zero(poly[p])) continue;
                const std::size_t deg = p + lift;
                const std::size_t target = deg >= k ? d + j : j;
                const std::size_t pos = deg >= k ? deg - k : deg;
                auto& dest = out[target];
                if (dest.size() <= pos) dest.resize(pos + 1, T::zero());
                dest[pos] += poly[p];
            }
        }
        return out;
    };

    typename AffineSystem<R>::Forms forms;
    for (std::size_t i = 0; i < d; ++i) forms.push_back(reduce_row(sys.forms()[i], 0));
    for (std::size_t i = 0; i < d; ++i) forms.push_back(reduce_row(sys.forms()[i], 1));

    std::vector<R> alpha = sys.constants();
    alpha.resize(2 * d, T::zero());
    return AffineSystem<R>(k, std::move(a), std::move(forms), std::move(alpha));
}

/// Applies degree_reduce until every form has degree below k.
template <ExactRing R>
AffineSystem<R> fully_reduce(AffineSystem<R> sys) {
    while (sys.max_degree() >= static_cast<long>(sys.base())) sys = degree_reduce(sys);
    return sys;
}

/// H(z) = (1+2z)/(1+z+z^2) + 2z H(z^2), H(0) = 1, right-hand side expanded to `order`.
AffineSystem<mpz_class> h_system(std::size_t order);
/// C(z) = z(1+2z)/(1-z^2) + C(z^2), C(0) = 0.
AffineSystem<mpz_class> c_system(std::size_t order);

/// Logarithmic derivative of sum s(n+1) z^n to `order`, computed both as a
/// quotient of series and by solving h_system; InvariantViolation if they differ.
IntSeries h_series(std::size_t order);
/// Solution of c_system; coefficient n >= 1 is (s(n-1)+s(n+1))/s(n).
IntSeries c_series(std::size_t order);

struct ProductLogDerivative {
    IntSeries product;         ///< A = prod P(z^(k^m)), order N
    IntSeries log_derivative;  ///< B = A'/A, order N - 1
};

/// Also checks B = P'/P + k z^(k-1) B(z^k) to order N - 1 (InvariantViolation otherwise).
ProductLogDerivative p_product_logderiv(const Polynomial& p, std::size_t k, std::size_t order);

/// prod_{2^m <= N} 1/(1 - z^(2^m)) truncated at N.
IntSeries binary_partition_series(std::size_t order);

/// Rank over Q of the given rows, by fraction-free elimination.
std::size_t exact_rank(std::vector<std::vector<mpz_class>> rows);

struct KernelProbeReport {
    std::string target;
    std::size_t k = 2;
    std::size_t depth = 0;
    std::size_t order = 0;
    std::size_t prefix_length = 0;
    std::vector<std::size_t> ranks;       ///< rank of all sections up to depth d
    std::vector<std::size_t> ranks_half;  ///< same probe at order N/2
    bool stable = true;                   ///< ranks == ranks_half

    nlohmann::json to_json() const;
    static KernelProbeReport from_json(const nlohmann::json& j);
    friend bool operator==(const KernelProbeReport&, const KernelProbeReport&) = default;
};

/// Rank of the span of the sections n -> a(k^d n + r), 0 <= r < k^d, over all
/// d up to each depth, as prefix vectors of length floor(N / k^D). Evidence of
/// k-regularity when bounded, never a proof.
KernelProbeReport kernel_rank(std::string target, std::span<const mpz_class> coeffs, std::size_t k,
                              std::size_t depth, std::size_t order);

}  // namespace sternkit
