#pragma once

// Monomial quotient algebras S = R[vars]/(relation monomials) and their
// elements. S is free as an R-module on the monomials not divisible by any
// relation ("standard" monomials); a product of standard monomials is either
// standard or zero in S, which is what makes coordinatewise content valid.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "orush/errors.hpp"
#include "orush/numeric.hpp"
#include "orush/poly.hpp"
#include "orush/rng.hpp"

namespace orush {

namespace detail {
// Unqualified call at namespace scope: scalar overloads are visible here,
// class-type coefficients resolve through argument-dependent lookup.
template <class T>
bool coeff_is_zero(const T& c) {
    return is_zero(c);
}
}  // namespace detail

// Base-agnostic description: variable names plus minimized relation monomials.
// Base ring data (which Z/m, which d) lives in the ring context; elements of
// different contexts never mix, so the descriptor only carries the shape.
class AlgebraDesc {
public:
    AlgebraDesc(std::vector<std::string> vars, std::vector<Exp> rels)
        : vars_(std::move(vars)) {
        if (vars_.empty() || vars_.size() > 2)
            throw UsageError("algebra: one or two variables supported");
        for (const Exp& r : rels) {
            if (r.total() == 0) throw UsageError("algebra: constant relation collapses the ring");
            if (vars_.size() == 1 && r.y != 0)
                throw UsageError("algebra: relation uses a second variable");
        }
        // keep only minimal relations: drop any monomial another one divides
        for (const Exp& r : rels) {
            bool redundant = false;
            for (const Exp& s : rels)
                if (!(s == r) && s.divides(r)) { redundant = true; break; }
            if (!redundant && !contains_rel(r)) rels_.push_back(r);
        }
        std::sort(rels_.begin(), rels_.end());
    }

    static AlgebraDesc poly_ring(std::vector<std::string> vars) {
        return AlgebraDesc(std::move(vars), {});
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Exp>& rels() const { return rels_; }
    size_t nvars() const { return vars_.size(); }

    bool is_standard(const Exp& e) const {
        for (const Exp& r : rels_)
            if (r.divides(e)) return false;
        return true;
    }

    // every relation a product of single variables (x, y alone)?
    bool rels_are_variables() const {
        for (const Exp& r : rels_)
            if (r.total() != 1) return false;
        return true;
    }
    bool rels_are_squarefree() const {
        for (const Exp& r : rels_)
            if (r.x > 1 || r.y > 1) return false;
        return true;
    }

    // standard monomials of total degree <= bound, lex order
    std::vector<Exp> standard_monomials(uint32_t bound) const;

    std::string monomial_str(const Exp& e) const;
    std::string to_string() const;

    friend bool operator==(const AlgebraDesc& a, const AlgebraDesc& b) {
        return a.vars_ == b.vars_ && a.rels_ == b.rels_;
    }
    friend bool operator!=(const AlgebraDesc& a, const AlgebraDesc& b) { return !(a == b); }

private:
    bool contains_rel(const Exp& r) const {
        for (const Exp& s : rels_)
            if (s == r) return true;
        return false;
    }

    std::vector<std::string> vars_;
    std::vector<Exp> rels_;
};

inline std::vector<Exp> AlgebraDesc::standard_monomials(uint32_t bound) const {
    std::vector<Exp> out;
    uint32_t ybound = vars_.size() == 2 ? bound : 0;
    for (uint32_t i = 0; i <= bound; ++i)
        for (uint32_t j = 0; j <= ybound; ++j) {
            if (i + j > bound) continue;
            Exp e{i, j};
            if (is_standard(e)) out.push_back(e);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string AlgebraDesc::monomial_str(const Exp& e) const {
    if (e.total() == 0) return "1";
    std::string s;
    auto app = [&s](const std::string& v, uint32_t k) {
        if (k == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (k > 1) s += "^" + std::to_string(k);
    };
    app(vars_[0], e.x);
    if (vars_.size() == 2) app(vars_[1], e.y);
    return s;
}

inline std::string AlgebraDesc::to_string() const {
    std::string s = "R[" + vars_[0];
    if (vars_.size() == 2) s += "," + vars_[1];
    s += "]";
    if (!rels_.empty()) {
        s += "/(";
        for (size_t i = 0; i < rels_.size(); ++i) {
            if (i) s += ",";
            s += monomial_str(rels_[i]);
        }
        s += ")";
    }
    return s;
}

// Element of S over the ring context Ctx: finite support on standard
// monomials, nonzero coefficients only.
template <class Ctx>
class AlgElem {
public:
    using Coeff = typename Ctx::Coeff;

    explicit AlgElem(AlgebraDesc alg) : alg_(std::move(alg)) {}

    const AlgebraDesc& algebra() const { return alg_; }
    const std::map<Exp, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exp& e, const Coeff& c) {
        if (detail::coeff_is_zero(c)) return;
        if (!alg_.is_standard(e)) return;  // the monomial is zero in S
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.total());
        return d;
    }

    std::vector<Coeff> coords() const {
        std::vector<Coeff> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.push_back(c);
        return out;
    }

    friend AlgElem operator+(const AlgElem& f, const AlgElem& g) {
        f.check(g);
        AlgElem r = f;
        for (const auto& [e, c] : g.terms_) r.add_term(e, c);
        return r;
    }
    friend AlgElem operator-(const AlgElem& f, const AlgElem& g) {
        f.check(g);
        AlgElem r = f;
        for (const auto& [e, c] : g.terms_) r.add_term(e, -c);
        return r;
    }
    friend AlgElem operator*(const AlgElem& f, const AlgElem& g) {
        f.check(g);
        AlgElem r(f.alg_);
        for (const auto& [e1, c1] : f.terms_)
            for (const auto& [e2, c2] : g.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    AlgElem operator-() const {
        AlgElem r(alg_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    AlgElem scaled(const Coeff& a) const {
        AlgElem r(alg_);
        for (const auto& [e, c] : terms_) r.add_term(e, a * c);
        return r;
    }

    friend bool operator==(const AlgElem& f, const AlgElem& g) {
        f.check(g);
        return f.terms_ == g.terms_;
    }
    friend bool operator!=(const AlgElem& f, const AlgElem& g) { return !(f == g); }

    std::string to_string(const Ctx& ctx) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string cs = ctx.coeff_str(c);
            if (e.total() == 0) {
                s += cs;
            } else {
                if (cs == "1")
                    s += alg_.monomial_str(e);
                else if (cs == "-1")
                    s += "-" + alg_.monomial_str(e);
                else if (cs.find('+') != std::string::npos ||
                         cs.find('-', 1) != std::string::npos)
                    s += "(" + cs + ")*" + alg_.monomial_str(e);
                else
                    s += cs + "*" + alg_.monomial_str(e);
            }
        }
        return s;
    }

private:
    void check(const AlgElem& o) const {
        if (alg_ != o.alg_) throw UsageError("elements of different algebras");
    }

    AlgebraDesc alg_;
    std::map<Exp, Coeff> terms_;
};

// Uniform random element: every standard monomial of total degree <= deg_bound
// independently gets a coefficient drawn from ctx.random (which may be zero).
template <class Ctx>
AlgElem<Ctx> random_element(const Ctx& ctx, const AlgebraDesc& alg, Rng& rng, long coeff_bound,
                            uint32_t deg_bound) {
    AlgElem<Ctx> f(alg);
    for (const Exp& e : alg.standard_monomials(deg_bound))
        f.add_term(e, ctx.random(rng, coeff_bound));
    return f;
}

}  // namespace orush
