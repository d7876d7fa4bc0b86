#pragma once

// Decision procedures and witness searches for the algebra classes the
// workbench knows about: Gaussian pairs, Dedekind-Mertens exponents, weak
// content, prime extension, power content (with transitivity), the principal
// intersection bridge condition, and the DVR base check.

#include <optional>
#include <string>
#include <vector>

#include "orush/algebra.hpp"
#include "orush/content.hpp"
#include "orush/errors.hpp"
#include "orush/ringctx.hpp"
#include "orush/verdict.hpp"

namespace orush {

// c(fg) = c(f)c(g) for one concrete pair; exact, so the verdict is proven
// either way.
template <class Ctx>
VerdictReport gaussian_pair(const Ctx& ctx, const AlgElem<Ctx>& f, const AlgElem<Ctx>& g) {
    auto cf = content(ctx, f).ideal;
    auto cg = content(ctx, g).ideal;
    auto cfg = content(ctx, f * g).ideal;
    auto prod = ctx.mul(cf, cg);
    VerdictReport r{"gaussian", "holds-proven", nullptr, 0, 1};
    if (!(cfg == prod)) {
        r.verdict = "fails";
        r.witness = json{{"f", elem_to_json(ctx, f)},
                         {"g", elem_to_json(ctx, g)},
                         {"c_fg", ideal_to_json(cfg)},
                         {"c_f_times_c_g", ideal_to_json(prod)}};
    }
    return r;
}

template <class Ctx>
VerdictReport gaussian_sampled(const Ctx& ctx, const AlgebraDesc& alg, const SampleConfig& cfg) {
    Rng rng(cfg.seed);
    for (long i = 0; i < cfg.samples; ++i) {
        auto f = random_element(ctx, alg, rng, cfg.coeff_bound, cfg.degree_bound);
        auto g = random_element(ctx, alg, rng, cfg.coeff_bound, cfg.degree_bound);
        VerdictReport r = gaussian_pair(ctx, f, g);
        if (r.failed()) {
            r.seed = cfg.seed;
            r.budget = cfg.samples;
            return r;
        }
    }
    return {"gaussian", "holds-on-samples", nullptr, cfg.seed, cfg.samples};
}

struct DMExponent {
    unsigned long n;
    unsigned long cap;
};

// Smallest n in [1, cap] with c(f)^n c(g) = c(f)^(n-1) c(fg). cap = 0 means
// the default deg(g) + cap_extra; a miss throws, since it would contradict
// content-algebra status at this cap.
template <class Ctx>
DMExponent dm_exponent(const Ctx& ctx, const AlgElem<Ctx>& f, const AlgElem<Ctx>& g,
                       unsigned long cap = 0, unsigned long cap_extra = 2) {
    if (cap == 0) cap = g.total_degree() + cap_extra;
    auto cf = content(ctx, f).ideal;
    auto cg = content(ctx, g).ideal;
    auto cfg = content(ctx, f * g).ideal;
    for (unsigned long n = 1; n <= cap; ++n) {
        // c(f)^n c(g) vs c(f)^(n-1) c(fg)
        auto lhs = ctx.mul(ctx.pow(cf, n), cg);
        auto rhs = ctx.mul(ctx.pow(cf, n - 1), cfg);
        if (lhs == rhs) return {n, cap};
    }
    throw Error("dm_exponent: exponent-not-found up to cap " + std::to_string(cap));
}

// sqrt(c(fg)) = sqrt(c(f)c(g)) for one pair.
template <class Ctx>
VerdictReport weak_content_pair(const Ctx& ctx, const AlgElem<Ctx>& f, const AlgElem<Ctx>& g,
                                const Int& budget = Int(1000000)) {
    auto cfg = content(ctx, f * g).ideal;
    auto prod = ctx.mul(content(ctx, f).ideal, content(ctx, g).ideal);
    auto lhs = ctx.radical(cfg, budget);
    auto rhs = ctx.radical(prod, budget);
    VerdictReport r{"weak-content", "holds-proven", nullptr, 0, 1};
    if (!(lhs == rhs)) {
        r.verdict = "fails";
        r.witness = json{{"f", elem_to_json(ctx, f)},
                         {"g", elem_to_json(ctx, g)},
                         {"rad_c_fg", ideal_to_json(lhs)},
                         {"rad_c_f_times_c_g", ideal_to_json(rhs)}};
    }
    return r;
}

template <class Ctx>
VerdictReport weak_content_sampled(const Ctx& ctx, const AlgebraDesc& alg,
                                   const SampleConfig& cfg) {
    Rng rng(cfg.seed);
    for (long i = 0; i < cfg.samples; ++i) {
        auto f = random_element(ctx, alg, rng, cfg.coeff_bound, cfg.degree_bound);
        auto g = random_element(ctx, alg, rng, cfg.coeff_bound, cfg.degree_bound);
        VerdictReport r = weak_content_pair(ctx, f, g, cfg.budget);
        if (r.failed()) {
            r.seed = cfg.seed;
            r.budget = cfg.samples;
            return r;
        }
    }
    return {"weak-content", "holds-on-samples", nullptr, cfg.seed, cfg.samples};
}

// Is p*S prime? S/pS = (R/p)[vars]/(rels) is a domain exactly when the
// minimized relations are single variables (or there are none); otherwise a
// minimal relation of degree >= 2 splits into two standard monomials whose
// product is zero.
std::optional<std::pair<Exp, Exp>> zero_divisor_pair(const AlgebraDesc& alg);

template <class Ctx>
VerdictReport prime_extension_check(const Ctx& ctx, const typename Ctx::Ideal& p,
                                    const AlgebraDesc& alg) {
    if (!ctx.is_prime_ideal(p))
        throw UsageError("prime_extension_check: the base ideal is not prime");
    auto pair = zero_divisor_pair(alg);
    if (!pair)
        return {"prime-extension", "holds-proven", nullptr, 0, 1};
    VerdictReport r{"prime-extension", "fails", nullptr, 0, 1};
    r.witness = json{{"p", ideal_to_json(p)},
                     {"zero_divisors",
                      json::array({alg.monomial_str(pair->first), alg.monomial_str(pair->second)})}};
    return r;
}

// Power content by the structural criterion: radical base ideals extend to
// radical ideals exactly when every relation monomial is squarefree. The
// sampled cross-check hunts for nilpotency witnesses and must agree.
struct NilpotencyWitness {
    Exp monomial;
    unsigned long n;
};
std::optional<NilpotencyWitness> squarefree_violation(const AlgebraDesc& alg);

template <class Ctx>
VerdictReport power_content_check(const Ctx& ctx, const AlgebraDesc& alg,
                                  const SampleConfig& cfg = {}) {
    auto structural = squarefree_violation(alg);

    // cross-validation: hunt for f outside I*S with a power inside, over the
    // radical ideal I = (0) (the base is a domain); squarefree relations must
    // leave this search empty-handed
    Rng rng(cfg.seed);
    long trials = std::min(cfg.samples, 200L);
    auto zero = ctx.zero_ideal();
    for (long i = 0; i < trials; ++i) {
        auto f = random_element(ctx, alg, rng, 4, cfg.degree_bound);
        if (in_extension(ctx, f, zero)) continue;
        auto fp = f;
        for (unsigned long n = 2; n <= 4; ++n) {
            fp = fp * f;
            if (in_extension(ctx, fp, zero)) {
                if (!structural)
                    throw Error(
                        "power_content_check: nilpotent found despite squarefree relations");
                break;
            }
        }
    }

    if (!structural) return {"power-content", "holds-proven", nullptr, cfg.seed, trials};

    // canonical witness built from the offending relation; re-verify it
    AlgElem<Ctx> f(alg);
    f.add_term(structural->monomial, ctx.from_int(1));
    auto fp = f;
    for (unsigned long n = 2; n <= structural->n; ++n) fp = fp * f;
    if (in_extension(ctx, f, zero) || !in_extension(ctx, fp, zero))
        throw Error("power_content_check: constructed witness does not verify");
    json witness = json{{"f", elem_to_json(ctx, f)},
                        {"n", structural->n},
                        {"ideal", ideal_to_json(zero)}};
    return {"power-content", "fails", witness, cfg.seed, trials};
}

// c(I) cap c(J) inside sqrt(c(I cap J)) for principal I = (f), J = (g).
// Supported inputs: equal generators (the containment degenerates), or
// scalar-times-monomial generators, where (f) cap (g) is exactly the ideal
// generated by ((a) cap (b)) * lcm(m, m') on the standard basis.
template <class Ctx>
VerdictReport prop46_condition_check(const Ctx& ctx, const AlgElem<Ctx>& f,
                                     const AlgElem<Ctx>& g, const Int& budget = Int(1000000)) {
    VerdictReport r{"prop46-condition", "holds-proven", nullptr, 0, 1};
    if (f == g) {
        auto cf = content(ctx, f).ideal;
        auto rad = ctx.radical(cf, budget);
        if (!ctx.contains(rad, cf)) {
            r.verdict = "fails";
            r.witness = json{{"c_f", ideal_to_json(cf)}, {"rad", ideal_to_json(rad)}};
        }
        return r;
    }
    if (f.terms().size() != 1 || g.terms().size() != 1)
        throw UsageError(
            "prop46_condition_check: generators must be equal or scalar multiples of monomials");
    const auto& [mf, af] = *f.terms().begin();
    const auto& [mg, ag] = *g.terms().begin();
    Exp lcm{std::max(mf.x, mg.x), std::max(mf.y, mg.y)};

    auto ca = ctx.ideal_of({af});
    auto cb = ctx.ideal_of({ag});
    auto lhs = ctx.intersect(ca, cb);  // c(I) cap c(J): contents are principal
    auto c_meet = f.algebra().is_standard(lcm) ? lhs : ctx.zero_ideal();
    auto rhs = ctx.radical(c_meet, budget);
    if (!ctx.contains(rhs, lhs)) {
        r.verdict = "fails";
        r.witness = json{{"f", elem_to_json(ctx, f)},
                         {"g", elem_to_json(ctx, g)},
                         {"meet_monomial", f.algebra().monomial_str(lcm)},
                         {"meet_monomial_standard", f.algebra().is_standard(lcm)},
                         {"c_I_cap_c_J", ideal_to_json(lhs)},
                         {"rad_c_meet", ideal_to_json(rhs)}};
    }
    return r;
}

// DVR base check at a prime p of Z: p*S stays prime (polynomial relations
// only become single-variable quotients), and the given f has finite p-adic
// order, witnessing f outside the intersection of all p^n S.
struct DvrBaseResult {
    VerdictReport report;
    unsigned long order;
};
DvrBaseResult dvr_base_check(const Int& p, const Poly<Rat>& f);

// Transitivity of the power-content structure: base quotient A = R[x]/(relsA),
// top B = A[y]/(relsB), composite R[x,y]/(relsA + relsB); the implication
// pc(A) and pc(B) => pc(composite) is checked on the decision procedure.
// Vacuous premises still count as the implication holding.
struct TransitivityResult {
    VerdictReport report;
    bool base_pc;
    bool top_pc;
    bool composite_pc;
    std::string composite;
};
TransitivityResult power_content_transitivity_check(const std::vector<Exp>& rels_a,
                                                    const std::vector<Exp>& rels_b);

}  // namespace orush
