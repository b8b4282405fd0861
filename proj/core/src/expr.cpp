#include "sternkit/expr.hpp"

#include <limits>

#include "sternkit/error.hpp"
#include "sternkit/sequences.hpp"

namespace sternkit {

struct Expr::Node {
    Op op;
    mpz_class value;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

std::uint64_t as_index(const mpz_class& x, const char* what) {
    if (sgn(x) < 0) throw DomainError(std::string(what) + " evaluated at negative argument " + x.get_str());
    if (!x.fits_ulong_p()) throw DomainError(std::string(what) + " argument too large: " + x.get_str());
    return x.get_ui();
}

mpz_class eval(const NodePtr& node, const mpz_class& e, const mpz_class& n, bool floor_pow2) {
    using Op = Expr::Op;
    auto sub = [&](const NodePtr& c) { return eval(c, e, n, floor_pow2); };
    switch (node->op) {
    case Op::constant:
        return node->value;
    case Op::var_e:
        return e;
    case Op::var_n:
        return n;
    case Op::add:
        return sub(node->lhs) + sub(node->rhs);
    case Op::sub:
        return sub(node->lhs) - sub(node->rhs);
    case Op::mul:
        return sub(node->lhs) * sub(node->rhs);
    case Op::neg:
        return -sub(node->lhs);
    case Op::pow2: {
        const mpz_class x = sub(node->lhs);
        if (sgn(x) < 0) {
            if (floor_pow2) return 0;
            throw DomainError("2^" + x.get_str() + " is not an integer");
        }
        if (x > 4096) throw DomainError("exponent too large");
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, x.get_ui());
        return r;
    }
    case Op::sign: {
        const mpz_class x = sub(node->lhs);
        return mpz_odd_p(x.get_mpz_t()) ? -1 : 1;
    }
    case Op::stern:
        return stern(as_index(sub(node->lhs), "s"));
    case Op::twisted:
        return twisted(as_index(sub(node->lhs), "t"));
    case Op::v2: {
        const mpz_class x = sub(node->lhs);
        if (x == 0) throw DomainError("v2(0) is undefined");
        return static_cast<unsigned long>(mpz_scan1(x.get_mpz_t(), 0));
    }
    case Op::mod: {
        const mpz_class m = sub(node->rhs);
        if (m == 0) throw DomainError("modulus 0");
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), sub(node->lhs).get_mpz_t(), m.get_mpz_t());
        if (sgn(r) < 0) r += abs(m);
        return r;
    }
    case Op::is_pow2: {
        const mpz_class x = sub(node->lhs);
        return (sgn(x) > 0 && mpz_popcount(x.get_mpz_t()) == 1) ? 1 : 0;
    }
    case Op::equal:
        return sub(node->lhs) == sub(node->rhs) ? 1 : 0;
    }
    throw Error("unknown expression node");
}

// Precedence: 0 sum, 1 product, 2 atom.
std::string show(const NodePtr& node, int context) {
    using Op = Expr::Op;
    auto wrap = [&](std::string s, int prec) { return prec < context ? "(" + s + ")" : s; };
    switch (node->op) {
    case Op::constant:
        return wrap(node->value.get_str(), sgn(node->value) < 0 ? 0 : 2);
    case Op::var_e:
        return "e";
    case Op::var_n:
        return "n";
    case Op::add:
        return wrap(show(node->lhs, 0) + "+" + show(node->rhs, 0), 0);
    case Op::sub:
        return wrap(show(node->lhs, 0) + "-" + show(node->rhs, 1), 0);
    case Op::mul:
        return wrap(show(node->lhs, 1) + "*" + show(node->rhs, 1), 1);
    case Op::neg:
        return wrap("-" + show(node->lhs, 1), 0);
    case Op::pow2: {
        std::string x = show(node->lhs, 2);
        return "2^" + x;
    }
    case Op::sign:
        return "(-1)^" + show(node->lhs, 2);
    case Op::stern:
        return "s(" + show(node->lhs, 0) + ")";
    case Op::twisted:
        return "t(" + show(node->lhs, 0) + ")";
    case Op::v2:
        return "v2(" + show(node->lhs, 0) + ")";
    case Op::mod:
        return "(" + show(node->lhs, 0) + " mod " + show(node->rhs, 0) + ")";
    case Op::is_pow2:
        return "[" + show(node->lhs, 0) + " in 2^N]";
    case Op::equal:
        return "[" + show(node->lhs, 0) + "=" + show(node->rhs, 0) + "]";
    }
    return "?";
}

}  // namespace

Expr::Expr(long value) : node_(std::make_shared<const Node>(Node{Op::constant, mpz_class(value), nullptr, nullptr})) {}

Expr Expr::var_e() { return Expr(std::make_shared<const Node>(Node{Op::var_e, 0, nullptr, nullptr})); }

Expr Expr::var_n() { return Expr(std::make_shared<const Node>(Node{Op::var_n, 0, nullptr, nullptr})); }

Expr Expr::unary(Op op, const Expr& a) {
    return Expr(std::make_shared<const Node>(Node{op, 0, a.node_, nullptr}));
}

Expr Expr::binary(Op op, const Expr& a, const Expr& b) {
    return Expr(std::make_shared<const Node>(Node{op, 0, a.node_, b.node_}));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Expr::Op::add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Expr::Op::sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Expr::Op::mul, a, b); }
Expr Expr::operator-() const { return unary(Op::neg, *this); }

mpz_class Expr::evaluate(const mpz_class& e, const mpz_class& n, bool floor_pow2) const {
    return eval(node_, e, n, floor_pow2);
}

std::string Expr::to_string() const { return show(node_, 0); }

}  // namespace sternkit
