#pragma once

// Hensel lifting of a simple root through truncated power series.
// Lifting is linear, one series coefficient per step: it works uniformly in
// every characteristic (Newton doubling would divide by 2), and it is
// deterministic, so lifted expansions are reproducible byte for byte.

#include <utility>
#include <vector>

#include "orush/errors.hpp"
#include "orush/poly.hpp"
#include "orush/series.hpp"

namespace orush {

// phi evaluated at a series, Horner in x. phi must be univariate in x with
// series coefficients of precision >= the precision of s.
template <typename K>
TruncSeries<K> poly_eval_series(const Poly<TruncSeries<K>>& phi, const TruncSeries<K>& s) {
    if (phi.is_zero_poly()) throw UsageError("cannot evaluate the zero polynomial as a series");
    if (phi.degree_y() > 0) throw UsageError("poly_eval_series expects a univariate polynomial");
    const size_t prec = s.precision();
    auto coeff_at = [&](long k) -> TruncSeries<K> {
        Poly<TruncSeries<K>> c = phi.coeff_of_x(static_cast<uint32_t>(k));
        if (c.is_zero_poly()) {
            K z = s.coeff(0) - s.coeff(0);
            return TruncSeries<K>::constant(s.var(), z, prec);
        }
        return c.terms().begin()->second.truncated(prec);
    };
    long d = phi.degree_x();
    TruncSeries<K> acc = coeff_at(d);
    for (long k = d - 1; k >= 0; --k) acc = acc * s + coeff_at(k);
    return acc;
}

template <typename K>
Poly<TruncSeries<K>> poly_derivative_x(const Poly<TruncSeries<K>>& phi) {
    Poly<TruncSeries<K>> out;
    for (const auto& [e, c] : phi.terms()) {
        if (e.x == 0) continue;
        out.add_term(Exp{e.x - 1, e.y}, mul_si(c, static_cast<long>(e.x)));
    }
    return out;
}

// Lift the simple root t0 of phi mod y to a series root s with
// phi(s) == 0 mod y^T and s == t0 mod y.
template <typename K>
TruncSeries<K> hensel_lift_root(const Poly<TruncSeries<K>>& phi, const K& t0, size_t T) {
    if (T == 0) throw UsageError("target precision must be positive");
    if (phi.is_zero_poly() || phi.degree_x() < 1)
        throw UsageError("hensel_lift_root expects a nonconstant polynomial");
    for (const auto& [e, c] : phi.terms())
        if (c.precision() < T)
            throw PrecisionError("coefficient precision " + std::to_string(c.precision()) +
                                 " is below the lifting target " + std::to_string(T));
    const std::string& var = phi.terms().begin()->second.var();

    TruncSeries<K> s = TruncSeries<K>::constant(var, t0, T);

    TruncSeries<K> value = poly_eval_series(phi, s);
    if (!is_zero(value.coeff(0)))
        throw UsageError("t0 is not a root of phi mod " + var);
    TruncSeries<K> slope = poly_eval_series(poly_derivative_x(phi), s);
    if (is_zero(slope.coeff(0)))
        throw LiftingError("root is not simple mod " + var + ": phi'(t0) is not a unit");
    K step_inv = inv_of(slope.coeff(0));

    // s_(k+1) = s_k + c*y^k with c = -[y^k]phi(s_k) / phi'(t0) mod y.
    std::vector<K> coeffs;
    coeffs.reserve(T);
    for (size_t i = 0; i < T; ++i) coeffs.push_back(s.coeff(i));
    for (size_t k = 1; k < T; ++k) {
        const K& residual = value.coeff(k);
        if (is_zero(residual)) continue;
        coeffs[k] = -(residual * step_inv);
        s = TruncSeries<K>(var, coeffs);
        value = poly_eval_series(phi, s);
    }
    if (!value.is_zero_at_precision())
        throw LiftingError("lifting failed to clear the residual at precision " + std::to_string(T));
    return s;
}

}  // namespace orush
