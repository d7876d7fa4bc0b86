#pragma once

// Finite-precision completion experiments. Completions are never represented
// as completed rings; everything here is a truncation with explicit precision
// and every conclusion is a certificate at that precision: the content
// approximation chain over a DVR, square- and cube-root factorization
// certificates in two dimensions, the node with its two analytic branches,
// the Eisenstein criterion, and the everywhere-local x/p counterexample.

#include <string>
#include <utility>
#include <vector>

#include "orush/errors.hpp"
#include "orush/hensel.hpp"
#include "orush/idealz.hpp"
#include "orush/modint.hpp"
#include "orush/numeric.hpp"
#include "orush/poly.hpp"
#include "orush/serial.hpp"
#include "orush/series.hpp"
#include "orush/verdict.hpp"

namespace orush {

// ----- content approximation chain over R = k[y] localized at (y)
//
// I_t = (t-th truncation of g) + (y^t) for t = 1..T. Each I_t is a power of
// the maximal ideal; only the exponent is stored. The chain descends and
// freezes at e = ord(g) as soon as t passes the order, which is exactly the
// content of g and the finite shadow of the completion being Gaussian here.
struct ApproxContentChain {
    std::string var;
    size_t precision = 0;
    std::vector<size_t> exponents;  // e_t for t = 1..T; I_t = (var^{e_t})
    size_t stabilization_index = 0; // least t with e_s equal from t onward
    size_t order = 0;               // the frozen exponent, ord(g)

    std::string stable_ideal() const {
        if (order == 0) return "(1)";
        if (order == 1) return "(" + var + ")";
        return "(" + var + "^" + std::to_string(order) + ")";
    }
};

template <typename K>
ApproxContentChain dvr_content_chain(const TruncSeries<K>& g, size_t T) {
    if (T == 0) throw UsageError("dvr_content_chain: the chain needs at least one stage");
    if (g.precision() < T)
        throw PrecisionError("dvr_content_chain: series precision " +
                             std::to_string(g.precision()) + " is below the requested " +
                             std::to_string(T));
    if (!g.truncated(T).order())
        throw PrecisionError(
            "dvr_content_chain: inconclusive, the series is indistinguishable from zero at "
            "precision " +
            std::to_string(T));

    ApproxContentChain chain;
    chain.var = g.var();
    chain.precision = T;
    for (size_t t = 1; t <= T; ++t) {
        // the exponent comes from the truncation itself: a vanishing
        // truncation leaves only the y^t part of I_t
        auto ot = g.truncated(t).order();
        chain.exponents.push_back(ot ? *ot : t);
    }
    chain.order = chain.exponents.back();
    size_t idx = T;
    while (idx > 1 && chain.exponents[idx - 2] == chain.order) --idx;
    chain.stabilization_index = idx;
    return chain;
}

// ----- factorization certificates
//
// target = left * right in K[poly_var][[series var]] below the stated
// precision, checked on construction; the factors must be non-units.
template <typename K>
struct FactorizationCertificate {
    std::string poly_var;
    Poly<TruncSeries<K>> target;
    Poly<TruncSeries<K>> left;
    Poly<TruncSeries<K>> right;
    size_t precision;

    FactorizationCertificate(std::string pv, Poly<TruncSeries<K>> t, Poly<TruncSeries<K>> l,
                             Poly<TruncSeries<K>> r, size_t T)
        : poly_var(std::move(pv)),
          target(std::move(t)),
          left(std::move(l)),
          right(std::move(r)),
          precision(T) {
        if (left.degree_x() < 1 || right.degree_x() < 1)
            throw UsageError("certificate factors must be non-units");
        for (const Poly<TruncSeries<K>>* f : {&target, &left, &right})
            for (const auto& [e, c] : f->terms())
                if (c.precision() < T)
                    throw PrecisionError("certificate coefficient precision " +
                                         std::to_string(c.precision()) +
                                         " is below the certificate precision " +
                                         std::to_string(T));
        Poly<TruncSeries<K>> residual = target - left * right;
        for (const auto& [e, c] : residual.terms())
            if (!c.truncated(T).is_zero_at_precision())
                throw Error("certificate residual is nonzero below precision " +
                            std::to_string(T));
    }

    std::string to_string() const {
        return poly_to_string(target, poly_var) + " = (" + poly_to_string(left, poly_var) +
               ") * (" + poly_to_string(right, poly_var) + ")";
    }
};

template <typename K>
json certificate_to_json(const FactorizationCertificate<K>& c) {
    auto poly_json = [](const Poly<TruncSeries<K>>& f) {
        json arr = json::array();
        for (const auto& [e, s] : f.terms()) arr.push_back(json::array({e.x, series_to_json(s)}));
        return arr;
    };
    return json{{"poly_var", c.poly_var},
                {"prec", c.precision},
                {"target", poly_json(c.target)},
                {"factors", json::array({poly_json(c.left), poly_json(c.right)})},
                {"residual_zero", true}};
}

// ----- Eisenstein criterion
//
// Integer coefficients: f in Z[x] univariate, pi a prime of Z.
bool eisenstein_check(const Poly<Int>& f, const Int& pi);

namespace detail {
template <typename K>
Poly<K> transpose_xy(const Poly<K>& f) {
    Poly<K> out;
    for (const auto& [e, c] : f.terms()) out.add_term(Exp{e.y, e.x}, c);
    return out;
}

// pi and c are polynomials in y alone over a field; divide in y
template <typename K>
bool divides_in_y(const Poly<K>& pi, const Poly<K>& c) {
    if (c.is_zero_poly()) return true;
    auto [q, r] = poly_divmod_x(transpose_xy(c), transpose_xy(pi));
    (void)q;
    return r.is_zero_poly();
}
}  // namespace detail

// Coefficients in k[y] for a field k: f in k[y][x] as a bivariate polynomial,
// pi a nonconstant polynomial in y alone. Primality of pi is the caller's
// contract; degree-1 pi (the only kind used here) is automatically prime.
template <typename K>
bool eisenstein_check(const Poly<K>& f, const Poly<K>& pi) {
    if (pi.is_zero_poly()) throw UsageError("eisenstein: pi is zero");
    if (pi.degree_x() > 0) throw UsageError("eisenstein: pi must be a polynomial in y alone");
    if (pi.degree_y() == 0) throw UsageError("eisenstein: pi is a unit");
    if (f.is_zero_poly() || f.degree_x() < 1)
        throw UsageError("eisenstein: f must be nonconstant in x");
    long d = f.degree_x();
    if (detail::divides_in_y(pi, f.coeff_of_x(static_cast<uint32_t>(d)))) return false;
    for (long i = 0; i < d; ++i)
        if (!detail::divides_in_y(pi, f.coeff_of_x(static_cast<uint32_t>(i)))) return false;
    return !detail::divides_in_y(pi * pi, f.coeff_of_x(0));
}

// ----- root expansions used by the demos
// sqrt(1 + var) over Q; coefficient k is the binomial coefficient (1/2 choose k)
TruncSeries<Rat> sqrt_one_plus(const std::string& var, size_t T);
// cube root of (1 + var) over F_2
TruncSeries<Fp> cbrt_one_plus_f2(const std::string& var, size_t T);

// ----- the two-dimensional example: factorization after completion
//
// char 0: x^2 - y^2(1+y) = (x + y*s)(x - y*s) with s = sqrt(1+y)
// char 2: x^3 - y^3(1+y) = (x + y*s)*q(x) with s the cube root of 1+y
FactorizationCertificate<Rat> dim2_char0(size_t T);
FactorizationCertificate<Fp> dim2_char2(size_t T);

struct Dim2Report {
    int characteristic = 0;
    size_t precision = 0;
    bool eisenstein = false;
    json machine;      // certificate + eisenstein + conclusion
    std::string text;  // printable summary
};
Dim2Report dim2_demo(size_t T, int characteristic);

// ----- the node: two analytic branches and the injective branch map
struct NodeReport {
    FactorizationCertificate<Rat> certificate;  // y^2 - x^2(1+x) = (y - x*s)(y + x*s)
    uint32_t degree_bound = 0;                  // monomial basis cut-off
    size_t map_precision = 0;                   // precision used for branch images
    std::vector<std::string> basis;             // monomials x^i y^j, j <= 1
    size_t kernel_dimension = 0;                // exact kernel of the image matrix
    json machine;
    std::string text;
};
NodeReport node_demo(size_t T, uint32_t degree_bound = 6);

// ----- the x/p counterexample over Z
struct XpReport {
    long bound = 0;
    std::vector<long> primes;
    IdealZ intersection;  // meet of (p) over p <= bound: the primorial
    VerdictReport verdict;
    json machine;
    std::string text;
};
XpReport xp_demo(long N);

}  // namespace orush
