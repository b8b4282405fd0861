#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace sternkit {

/// Integer-valued closed form in the parameters e and n, interpreted at run
/// time. Built with the helpers below and the arithmetic operators, e.g.
///
///     s(pow2(e) + n) == s(pow2(e) - n) + s(n)
///
/// Evaluating s or t at a negative argument, or 2^x at negative x, throws
/// DomainError unless the floor-power mode is requested (then 2^x = 0 for x < 0,
/// which is what range bounds such as n <= 2^(e-1) at e = 0 need).
class Expr {
public:
    enum class Op { constant, var_e, var_n, add, sub, mul, neg, pow2, sign, stern, twisted, v2, mod, is_pow2, equal };

    struct Node;

    Expr(long value);  // NOLINT: integer literals read naturally in identity tables

    mpz_class evaluate(const mpz_class& e, const mpz_class& n, bool floor_pow2 = false) const;
    std::string to_string() const;

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    Expr operator-() const;

    // factories
    static Expr var_e();
    static Expr var_n();
    static Expr unary(Op op, const Expr& a);
    static Expr binary(Op op, const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

namespace expr {

inline const Expr e = Expr::var_e();
inline const Expr n = Expr::var_n();

inline Expr pow2(const Expr& x) { return Expr::unary(Expr::Op::pow2, x); }
/// (-1)^x
inline Expr sign(const Expr& x) { return Expr::unary(Expr::Op::sign, x); }
inline Expr s(const Expr& x) { return Expr::unary(Expr::Op::stern, x); }
inline Expr t(const Expr& x) { return Expr::unary(Expr::Op::twisted, x); }
inline Expr v2(const Expr& x) { return Expr::unary(Expr::Op::v2, x); }
/// Non-negative remainder.
inline Expr mod(const Expr& x, const Expr& m) { return Expr::binary(Expr::Op::mod, x, m); }
/// 1 if x is a power of two (x >= 1), else 0.
inline Expr is_pow2(const Expr& x) { return Expr::unary(Expr::Op::is_pow2, x); }
/// 1 if a == b, else 0.
inline Expr equal(const Expr& a, const Expr& b) { return Expr::binary(Expr::Op::equal, a, b); }

}  // namespace expr

}  // namespace sternkit
