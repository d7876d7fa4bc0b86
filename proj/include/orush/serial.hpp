#pragma once

// JSON forms for every value the CLI reads or writes. Arbitrary-precision
// integers and rationals are carried as decimal strings so reports stay exact
// and byte-identical across platforms; ordered_json keeps field order stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "orush/algebra.hpp"
#include "orush/content.hpp"
#include "orush/idealz.hpp"
#include "orush/poly.hpp"
#include "orush/quadideal.hpp"
#include "orush/ringctx.hpp"
#include "orush/series.hpp"

namespace orush {

using json = nlohmann::ordered_json;

// ideals

inline json to_json(const IdealZ& i) { return json{{"gen", i.gen().get_str()}}; }

inline json to_json(const IdealZm& i) {
    return json{{"mod", i.modulus().get_str()}, {"gen", i.gen().get_str()}};
}

inline json to_json(const QuadIdeal& i) {
    json hnf = json::array();
    if (!i.is_zero()) hnf = {i.a().get_str(), i.b().get_str(), i.c().get_str()};
    return json{{"d", i.d().get_si()}, {"hnf", hnf}};
}

inline json to_json(const IdealFactorization& f) {
    json out = json::array();
    for (const auto& pf : f) out.push_back({{"prime", to_json(pf.prime)}, {"exp", pf.exp}});
    return out;
}

// scalars

inline std::string coeff_string(const Int& x) { return x.get_str(); }
inline std::string coeff_string(const Rat& x) { return to_string(x); }
inline std::string coeff_string(const QuadElem& x) { return to_string(x); }
inline std::string coeff_string(const ModInt& x) { return x.residue().get_str(); }
inline std::string coeff_string(const Fp& x) { return x.residue().get_str(); }

// polynomials in one variable: [[exponent, "coeff"], ...]
template <class R>
json poly_to_json(const Poly<R>& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        if (e.y != 0) throw UsageError("poly_to_json: polynomial is not univariate");
        out.push_back({e.x, coeff_string(c)});
    }
    return out;
}

// series: {"var": "y", "prec": T, "coeffs": ["...", ...]}
template <class K>
json series_to_json(const TruncSeries<K>& s) {
    json coeffs = json::array();
    for (size_t i = 0; i < s.precision(); ++i) coeffs.push_back(coeff_string(s.coeff(i)));
    return json{{"var", s.var()}, {"prec", s.precision()}, {"coeffs", coeffs}};
}

// algebras and elements

inline json to_json(const AlgebraDesc& a) {
    json rels = json::array();
    for (const Exp& r : a.rels()) rels.push_back(a.monomial_str(r));
    json vars = json::array();
    for (const auto& v : a.vars()) vars.push_back(v);
    return json{{"vars", vars}, {"rels", rels}};
}

template <class Ctx>
json elem_to_json(const Ctx& ctx, const AlgElem<Ctx>& f) {
    json alg = to_json(f.algebra());
    alg["base"] = ctx.name();
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({f.algebra().monomial_str(e), coeff_string(c)});
    return json{{"algebra", alg}, {"terms", terms}};
}

// ideal json dispatch usable from templates
inline json ideal_to_json(const IdealZ& i) { return to_json(i); }
inline json ideal_to_json(const IdealZm& i) { return to_json(i); }
inline json ideal_to_json(const QuadIdeal& i) { return to_json(i); }

}  // namespace orush
