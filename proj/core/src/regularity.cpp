#include "sternkit/regularity.hpp"

#include <algorithm>

#include "sternkit/sequences.hpp"

namespace sternkit {

AffineSystem<mpz_class> h_system(std::size_t order) {
    const IntSeries num = IntSeries::from_polynomial(Polynomial{1, 2}, order);
    const IntSeries den = IntSeries::from_polynomial(Polynomial{1, 1, 1}, order);
    AffineSystem<mpz_class>::Forms forms{{ZPolynomial<mpz_class>{0, 2}}};
    return AffineSystem<mpz_class>(2, {div_exact(num, den)}, std::move(forms), {mpz_class(1)});
}

AffineSystem<mpz_class> c_system(std::size_t order) {
    const IntSeries num = IntSeries::from_polynomial(Polynomial{0, 1, 2}, order);
    const IntSeries den = IntSeries::from_polynomial(Polynomial{1, 0, -1}, order);
    AffineSystem<mpz_class>::Forms forms{{ZPolynomial<mpz_class>{1}}};
    return AffineSystem<mpz_class>(2, {div_exact(num, den)}, std::move(forms), {mpz_class(0)});
}

IntSeries h_series(std::size_t order) {
    IntSeries by_quotient = log_derivative(shifted_stern_series(order + 1));
    IntSeries by_fixed_point = solve_affine_system(h_system(order), order).front();
    if (!by_quotient.identical(by_fixed_point)) {
        throw InvariantViolation("H(z): logarithmic derivative and functional equation disagree");
    }
    return by_quotient;
}

IntSeries c_series(std::size_t order) { return solve_affine_system(c_system(order), order).front(); }

ProductLogDerivative p_product_logderiv(const Polynomial& p, std::size_t k, std::size_t order) {
    if (order == 0) throw PreconditionError("product log derivative needs order >= 1");
    IntSeries a = infinite_product(p, k, order);
    IntSeries b = log_derivative(a);
    const std::size_t n = order - 1;
    const IntSeries rational_part =
        div_exact(IntSeries::from_polynomial(p.derivative(), n), IntSeries::from_polynomial(p, n));
    const IntSeries scaled = mpz_class(static_cast<unsigned long>(k)) * shift_up(substitute_power(b, k, n), k - 1);
    const IntSeries rhs = rational_part + scaled.truncate(std::min(scaled.order(), n));
    if (rhs.order() != n || !rhs.identical(b)) {
        throw InvariantViolation("B(z) = P'/P + k z^(k-1) B(z^k) fails");
    }
    return {std::move(a), std::move(b)};
}

IntSeries binary_partition_series(std::size_t order) {
    IntSeries acc = IntSeries::constant(1, order);
    for (std::size_t step = 1; step <= order; step *= 2) {
        acc = div_exact(acc, IntSeries::from_polynomial(Polynomial{1} - Polynomial::monomial(1, step), order));
        if (step > order / 2) break;
    }
    return acc;
}

std::size_t exact_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const mpz_class& piv = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const mpz_class factor = m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class v = piv * m[i][j] - factor * m[rank][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::size_t> probe_ranks(std::span<const mpz_class> coeffs, std::size_t k, std::size_t depth,
                                     std::size_t length) {
    std::vector<std::size_t> ranks;
    std::vector<std::vector<mpz_class>> rows;
    std::size_t stride = 1;
    for (std::size_t d = 0; d <= depth; ++d, stride *= k) {
        for (std::size_t r = 0; r < stride; ++r) {
            std::vector<mpz_class> row(length);
            for (std::size_t n = 0; n < length; ++n) row[n] = coeffs[stride * n + r];
            rows.push_back(std::move(row));
        }
        ranks.push_back(exact_rank(rows));
    }
    return ranks;
}

}  // namespace

KernelProbeReport kernel_rank(std::string target, std::span<const mpz_class> coeffs, std::size_t k,
                              std::size_t depth, std::size_t order) {
    if (k < 2) throw PreconditionError("kernel base must be at least 2");
    std::size_t top = 1;
    for (std::size_t d = 0; d < depth; ++d) top *= k;
    if (order < top) {
        throw PreconditionError("order " + std::to_string(order) + " below k^depth = " + std::to_string(top));
    }
    if (coeffs.size() < order + 1) throw PreconditionError("not enough coefficients for the requested order");

    KernelProbeReport report;
    report.target = std::move(target);
    report.k = k;
    report.depth = depth;
    report.order = order;
    report.prefix_length = order / top;
    report.ranks = probe_ranks(coeffs, k, depth, report.prefix_length);
    const std::size_t half = (order / 2) / top;
    if (half > 0) report.ranks_half = probe_ranks(coeffs, k, depth, half);
    report.stable = report.ranks == report.ranks_half;
    return report;
}

nlohmann::json KernelProbeReport::to_json() const {
    return {{"target", target}, {"k", k},           {"depth", depth},           {"order", order},
            {"prefix_length", prefix_length},      {"ranks", ranks},           {"ranks_half", ranks_half},
            {"stable", stable}};
}

KernelProbeReport KernelProbeReport::from_json(const nlohmann::json& j) {
    KernelProbeReport r;
    r.target = j.at("target").get<std::string>();
    r.k = j.at("k").get<std::size_t>();
    r.depth = j.at("depth").get<std::size_t>();
    r.order = j.at("order").get<std::size_t>();
    r.prefix_length = j.at("prefix_length").get<std::size_t>();
    r.ranks = j.at("ranks").get<std::vector<std::size_t>>();
    r.ranks_half = j.at("ranks_half").get<std::vector<std::size_t>>();
    r.stable = j.at("stable").get<bool>();
    return r;
}

}  // namespace sternkit
