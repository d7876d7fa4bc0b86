#pragma once

// The content ideal c(f) and its consumers. S is free over R on the standard
// monomials, so c(f) is the ideal generated by the coordinates of f, and
// f lies in I*S exactly when every coordinate lies in I. That coordinate
// description is what the minimality property tests validate.

#include <vector>

#include "orush/algebra.hpp"
#include "orush/errors.hpp"
#include "orush/ringctx.hpp"

namespace orush {

template <class Ctx>
struct ContentResult {
    typename Ctx::Ideal ideal;
    std::vector<typename Ctx::Coeff> coords;  // the generating coordinate set
};

template <class Ctx>
ContentResult<Ctx> content(const Ctx& ctx, const AlgElem<Ctx>& f) {
    std::vector<typename Ctx::Coeff> coords = f.coords();
    return {ctx.ideal_of(coords), coords};
}

// I in L_f, i.e. f in I*S?
template <class Ctx>
bool in_extension(const Ctx& ctx, const AlgElem<Ctx>& f, const typename Ctx::Ideal& ideal) {
    for (const auto& [e, c] : f.terms())
        if (!ctx.contains(ideal, c)) return false;
    return true;
}

// c(J) for a finitely generated ideal J of S: the sum of the generators'
// contents.
template <class Ctx>
typename Ctx::Ideal ideal_content(const Ctx& ctx, const std::vector<AlgElem<Ctx>>& gens) {
    typename Ctx::Ideal out = ctx.zero_ideal();
    for (const auto& g : gens) out = ctx.add(out, content(ctx, g).ideal);
    return out;
}

// The finite-prime criterion for a Dedekind (or Z) base: the primes p with
// f in p*S are exactly the prime divisors of c(f), and
// n = (max exponent in the factorization of c(f)) + 1 satisfies f not in
// p^n*S for every such p. Both claims are re-verified on the spot, along
// with a sample of primes away from c(f).
template <class Ctx>
struct DedekindOrResult {
    typename Ctx::Ideal content_ideal;
    std::vector<typename Ctx::Ideal> primes;
    unsigned long bound_n;
    bool verified;  // all membership post-checks passed
};

template <class Ctx>
DedekindOrResult<Ctx> dedekind_or_check(const Ctx& ctx, const AlgElem<Ctx>& f,
                                        const Int& budget = Int(1000000)) {
    if (f.is_zero()) throw UsageError("dedekind_or_check: undefined for the zero element");
    DedekindOrResult<Ctx> out{content(ctx, f).ideal, {}, 1, false};

    long max_exp = 0;
    if (!out.content_ideal.is_unit()) {
        for (const auto& [p, e] : ctx.factor(out.content_ideal, budget)) {
            out.primes.push_back(p);
            max_exp = std::max(max_exp, e);
        }
    }
    out.bound_n = static_cast<unsigned long>(max_exp) + 1;

    out.verified = true;
    for (const auto& p : out.primes) {
        if (!in_extension(ctx, f, p)) out.verified = false;                        // p in L_f
        if (in_extension(ctx, f, ctx.pow(p, out.bound_n))) out.verified = false;   // p^n not in L_f
    }
    for (const auto& q : ctx.spot_primes(out.content_ideal, 8))
        if (in_extension(ctx, f, q)) out.verified = false;
    return out;
}

// Does content formation commute with localization at p? For the free
// Z-module spanned by f's monomials this says v_p(gcd of coordinates) equals
// the minimum coordinate valuation.
inline bool content_localize_check(const std::vector<Int>& coords, const Int& p) {
    if (!is_prime(p)) throw UsageError("content_localize_check: p must be prime");
    Int g = 0;
    long minv = -1;
    for (const auto& x : coords) {
        if (is_zero(x)) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        long v = valuation(x, p);
        if (minv < 0 || v < minv) minv = v;
    }
    if (is_zero(g)) return true;  // zero element: both sides degenerate
    return valuation(g, p) == minv;
}

inline bool content_localize_check(const ZRing& ctx, const AlgElem<ZRing>& f, const Int& p) {
    (void)ctx;
    return content_localize_check(f.coords(), p);
}

}  // namespace orush
