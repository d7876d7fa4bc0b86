#pragma once

// Expression input for the command line: integers, w, x, y, + - * and
// parentheses, with ^ for repeated powers, / restricted to division by
// constants, and juxtaposition as multiplication ("2x"). Expressions are
// parsed once into a small tree, then evaluated against a coefficient ring.

#include <functional>
#include <string>
#include <vector>

#include "orush/algebra.hpp"
#include "orush/errors.hpp"
#include "orush/numeric.hpp"
#include "orush/poly.hpp"
#include "orush/quad.hpp"
#include "orush/ringctx.hpp"

namespace orush {

struct ExprNode {
    enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Kind::Number;
    Int number = 0;     // Number
    char symbol = 0;    // Symbol: 'w', 'x' or 'y'
    long exponent = 0;  // Pow
    std::vector<ExprNode> kids;
};

ExprNode parse_expression(const std::string& src);

// How to turn literals into coefficients of K. from_w and divide reject by
// default; rings that support them install their own.
template <typename K>
struct CoeffOps {
    std::function<K(const Int&)> from_int;
    std::function<K()> from_w = []() -> K { throw UsageError("'w' needs a quadratic base ring"); };
    std::function<K(const K&, const K&)> divide = [](const K&, const K&) -> K {
        throw UsageError("division is not supported over this coefficient ring");
    };
};

template <typename K>
Poly<K> eval_poly(const ExprNode& n, const CoeffOps<K>& ops) {
    switch (n.kind) {
        case ExprNode::Kind::Number: {
            Poly<K> p;
            p.add_term(Exp{0, 0}, ops.from_int(n.number));
            return p;
        }
        case ExprNode::Kind::Symbol: {
            Poly<K> p;
            if (n.symbol == 'w')
                p.add_term(Exp{0, 0}, ops.from_w());
            else if (n.symbol == 'x')
                p.add_term(Exp{1, 0}, ops.from_int(1));
            else
                p.add_term(Exp{0, 1}, ops.from_int(1));
            return p;
        }
        case ExprNode::Kind::Add:
            return eval_poly(n.kids[0], ops) + eval_poly(n.kids[1], ops);
        case ExprNode::Kind::Sub:
            return eval_poly(n.kids[0], ops) - eval_poly(n.kids[1], ops);
        case ExprNode::Kind::Mul:
            return eval_poly(n.kids[0], ops) * eval_poly(n.kids[1], ops);
        case ExprNode::Kind::Neg:
            return -eval_poly(n.kids[0], ops);
        case ExprNode::Kind::Pow: {
            Poly<K> base = eval_poly(n.kids[0], ops);
            Poly<K> acc;
            acc.add_term(Exp{0, 0}, ops.from_int(1));
            for (long i = 0; i < n.exponent; ++i) acc = acc * base;
            return acc;
        }
        case ExprNode::Kind::Div: {
            Poly<K> num = eval_poly(n.kids[0], ops);
            Poly<K> den = eval_poly(n.kids[1], ops);
            if (den.is_zero_poly()) throw UsageError("division by zero");
            if (den.total_degree() > 0)
                throw UsageError("division is only supported by constants");
            const K& c = den.terms().begin()->second;
            Poly<K> out;
            for (const auto& [e, v] : num.terms()) out.add_term(e, ops.divide(v, c));
            return out;
        }
    }
    throw Error("eval_poly: unhandled node");
}

// ----- per-ring coefficient operations

inline CoeffOps<Int> coeff_ops(const ZRing&) {
    CoeffOps<Int> ops;
    ops.from_int = [](const Int& n) { return n; };
    ops.divide = [](const Int& a, const Int& b) -> Int {
        if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            throw UsageError(a.get_str() + " is not divisible by " + b.get_str() + " over Z");
        return a / b;
    };
    return ops;
}

inline CoeffOps<ModInt> coeff_ops(const ZmRing& ctx) {
    Int m = ctx.modulus();
    CoeffOps<ModInt> ops;
    ops.from_int = [m](const Int& n) { return ModInt(n, m); };
    ops.divide = [m](const ModInt& a, const ModInt& b) -> ModInt {
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), b.residue().get_mpz_t(), m.get_mpz_t()) == 0)
            throw UsageError(b.residue().get_str() + " is not invertible modulo " + m.get_str());
        return ModInt(a.residue() * inv, m);
    };
    return ops;
}

inline CoeffOps<QuadElem> coeff_ops(const QuadRing& ctx) {
    Int d = ctx.d();
    CoeffOps<QuadElem> ops;
    ops.from_int = [d](const Int& n) { return QuadElem(n, 0, d); };
    ops.from_w = [d]() { return QuadElem(0, 1, d); };
    ops.divide = [](const QuadElem& a, const QuadElem& b) -> QuadElem {
        Int nb = b.norm();
        if (sgn(nb) == 0) throw UsageError("division by zero");
        QuadElem t = a * b.conj();
        if (!mpz_divisible_p(t.a().get_mpz_t(), nb.get_mpz_t()) ||
            !mpz_divisible_p(t.b().get_mpz_t(), nb.get_mpz_t()))
            throw UsageError(to_string(a) + " is not divisible by " + to_string(b));
        return QuadElem(t.a() / nb, t.b() / nb, t.d());
    };
    return ops;
}

inline CoeffOps<Rat> rat_coeff_ops() {
    CoeffOps<Rat> ops;
    ops.from_int = [](const Int& n) { return Rat(n); };
    ops.divide = [](const Rat& a, const Rat& b) -> Rat {
        if (sgn(b) == 0) throw UsageError("division by zero");
        return a / b;
    };
    return ops;
}

// ----- conveniences used by the command line

Poly<Int> eval_int_poly(const std::string& src);
Poly<Rat> eval_rat_poly(const std::string& src);
// "x^2, x*y" -> exponent vectors; each entry must be a plain monomial
std::vector<Exp> parse_monomial_list(const std::string& src);
std::vector<std::string> split_list(const std::string& src);

template <class Ctx>
AlgElem<Ctx> eval_element(const Ctx& ctx, const AlgebraDesc& alg, const std::string& src) {
    Poly<typename Ctx::Coeff> p = eval_poly(parse_expression(src), coeff_ops(ctx));
    if (alg.nvars() == 1 && p.degree_y() > 0)
        throw UsageError("expression '" + src + "' uses y but the algebra has one variable");
    AlgElem<Ctx> out(alg);
    for (const auto& [e, c] : p.terms()) out.add_term(e, c);
    return out;
}

template <class Ctx>
typename Ctx::Coeff eval_constant(const Ctx& ctx, const std::string& src) {
    Poly<typename Ctx::Coeff> p = eval_poly(parse_expression(src), coeff_ops(ctx));
    if (p.degree_x() > 0 || p.degree_y() > 0)
        throw UsageError("expected a base ring constant, got '" + src + "'");
    return p.is_zero_poly() ? ctx.from_int(0) : p.terms().begin()->second;
}

template <class Ctx>
std::vector<typename Ctx::Coeff> parse_constant_list(const Ctx& ctx, const std::string& src) {
    std::vector<typename Ctx::Coeff> out;
    for (const std::string& piece : split_list(src)) out.push_back(eval_constant(ctx, piece));
    return out;
}

}  // namespace orush
