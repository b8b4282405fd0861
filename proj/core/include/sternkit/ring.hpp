#pragma once

#include <algorithm>

#include <string>
#include <string_view>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "sternkit/error.hpp"
#include "sternkit/polynomial.hpp"

namespace sternkit {

/// Exact coefficient rings: integers, rationals and Z[w].
template <class R>
struct ring_traits;

template <>
struct ring_traits<mpz_class> {
    static constexpr std::string_view name = "integer";
    static mpz_class zero() { return 0; }
    static mpz_class one() { return 1; }
    static mpz_class from_int(long v) { return v; }
    static bool is_zero(const mpz_class& x) { return x == 0; }
    static bool is_unit(const mpz_class& x) { return x == 1 || x == -1; }
    static mpz_class unit_inverse(const mpz_class& x) {
        if (!is_unit(x)) throw DivisionError("integer " + x.get_str() + " is not a unit");
        return x;
    }
    static int sign(const mpz_class& x) { return sgn(x); }
    static bool compound(const mpz_class&) { return false; }
    static std::string to_string(const mpz_class& x) { return x.get_str(); }
    static nlohmann::json to_json(const mpz_class& x) { return x.get_str(); }
    static mpz_class from_json(const nlohmann::json& j) { return mpz_class(j.get<std::string>()); }
};

template <>
struct ring_traits<mpq_class> {
    static constexpr std::string_view name = "rational";
    static mpq_class zero() { return 0; }
    static mpq_class one() { return 1; }
    static mpq_class from_int(long v) { return v; }
    static bool is_zero(const mpq_class& x) { return x == 0; }
    static bool is_unit(const mpq_class& x) { return x != 0; }
    static mpq_class unit_inverse(const mpq_class& x) {
        if (x == 0) throw DivisionError("division by zero rational");
        return mpq_class(1) / x;
    }
    static int sign(const mpq_class& x) { return sgn(x); }
    static bool compound(const mpq_class&) { return false; }
    static std::string to_string(const mpq_class& x) { return x.get_str(); }
    static nlohmann::json to_json(const mpq_class& x) { return x.get_str(); }
    static mpq_class from_json(const nlohmann::json& j) {
        mpq_class q(j.get<std::string>());
        q.canonicalize();
        return q;
    }
};

template <>
struct ring_traits<Polynomial> {
    static constexpr std::string_view name = "integer-polynomial-in-w";
    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial::constant(1); }
    static Polynomial from_int(long v) { return Polynomial::constant(v); }
    static bool is_zero(const Polynomial& x) { return x.is_zero(); }
    static bool is_unit(const Polynomial& x) {
        return x.degree() == 0 && (x.coeff(0) == 1 || x.coeff(0) == -1);
    }
    static Polynomial unit_inverse(const Polynomial& x) {
        if (!is_unit(x)) throw DivisionError("polynomial " + x.to_string() + " is not a unit");
        return x;
    }
    // Only single-term polynomials carry a meaningful sign when printed inside a series.
    static int sign(const Polynomial& x) {
        if (x.is_zero()) return 0;
        return compound(x) ? 1 : sgn(x.coefficients().back());
    }
    static bool compound(const Polynomial& x) {
        return std::count_if(x.coefficients().begin(), x.coefficients().end(), [](const mpz_class& c) { return c != 0; }) > 1;
    }
    static std::string to_string(const Polynomial& x) { return x.to_string('w'); }
    static nlohmann::json to_json(const Polynomial& x) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : x.coefficients()) arr.push_back(c.get_str());
        return arr;
    }
    static Polynomial from_json(const nlohmann::json& j) {
        std::vector<mpz_class> cs;
        for (const auto& c : j) cs.emplace_back(c.get<std::string>());
        return Polynomial(std::move(cs));
    }
};

template <class R>
concept ExactRing = requires(const R& a, const R& b) {
    { ring_traits<R>::zero() };
    { ring_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { R(a + b) };
    { R(a * b) };
    { R(a - b) };
};

}  // namespace sternkit
