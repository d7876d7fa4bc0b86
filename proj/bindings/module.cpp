// Python face of the workbench. Every function takes the same string inputs
// the command line does (element grammar: integers, w, x, y, + - * /, ^ and
// juxtaposition) and returns one JSON document as a string; the pure-python
// package parses it into plain dicts. Keeping the wire format identical to
// the CLI's --json reports means one serialization to document and test.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orush/checkers.hpp"
#include "orush/completion.hpp"
#include "orush/content.hpp"
#include "orush/parse.hpp"
#include "orush/serial.hpp"

namespace py = pybind11;
using namespace orush;

namespace {

using OptLong = std::optional<long>;
using OptStr = std::optional<std::string>;

template <class F>
json with_base(const OptLong& d, const OptStr& m, F&& fn) {
    if (d && m) throw UsageError("pick at most one of d (quadratic) and m (modular)");
    if (d) return fn(QuadRing(Int(*d)));
    if (m) return fn(ZmRing(int_from_string(*m)));
    return fn(ZRing());
}

template <class F>
json with_domain(const OptLong& d, const OptStr& m, F&& fn) {
    if (m) throw UsageError("this operation needs a domain base: Z or Z[w], not Z/m");
    if (d) return fn(QuadRing(Int(*d)));
    return fn(ZRing());
}

template <class Ctx>
bool expr_uses_y(const Ctx& ctx, const std::string& src) {
    return eval_poly(parse_expression(src), coeff_ops(ctx)).degree_y() > 0;
}

// Same variable inference the command line does: explicit vars win, else y
// appears iff the relations or any parsed expression mention it.
AlgebraDesc resolve_algebra(const std::string& vars, const std::string& rels, bool exprs_use_y) {
    std::vector<Exp> r;
    if (!rels.empty()) r = parse_monomial_list(rels);
    bool needs_y = exprs_use_y;
    for (const Exp& e : r) needs_y = needs_y || e.y > 0;

    std::vector<std::string> v;
    if (!vars.empty()) {
        v = split_list(vars);
        if (v != std::vector<std::string>{"x"} && v != std::vector<std::string>{"x", "y"})
            throw UsageError("vars must be \"x\" or \"x,y\"");
    } else {
        v = needs_y ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x"};
    }
    return AlgebraDesc(v, r);
}

Int parse_budget(const std::string& budget) {
    Int b = int_from_string(budget);
    if (sgn(b) <= 0) throw UsageError("budget must be positive");
    return b;
}

SampleConfig sampling(uint64_t seed, long samples, long coeff_bound, uint32_t degree_bound,
                      const std::string& budget) {
    if (samples <= 0) throw UsageError("samples must be positive");
    if (coeff_bound <= 0) throw UsageError("coeff_bound must be positive");
    if (degree_bound == 0) throw UsageError("degree_bound must be positive");
    SampleConfig s;
    s.seed = seed;
    s.samples = samples;
    s.coeff_bound = coeff_bound;
    s.degree_bound = degree_bound;
    s.budget = parse_budget(budget);
    return s;
}

// ----- operations, one per subcommand, each returning the payload document

std::string op_content(const std::string& f, OptLong d, OptStr m, const std::string& vars,
                       const std::string& rels) {
    return with_base(d, m, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(vars, rels, expr_uses_y(ctx, f));
        auto fe = eval_element(ctx, alg, f);
        auto res = content(ctx, fe);
        json coords = json::array();
        for (const auto& c : res.coords) coords.push_back(ctx.coeff_str(c));
        return json{{"element", elem_to_json(ctx, fe)},
                    {"coords", coords},
                    {"content", ideal_to_json(res.ideal)}};
    }).dump();
}

std::string op_lf(const std::string& f, const std::string& gens, OptLong d, OptStr m,
                  const std::string& vars, const std::string& rels) {
    return with_base(d, m, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(vars, rels, expr_uses_y(ctx, f));
        auto fe = eval_element(ctx, alg, f);
        auto ideal = ctx.ideal_of(parse_constant_list(ctx, gens));
        return json{{"element", elem_to_json(ctx, fe)},
                    {"ideal", ideal_to_json(ideal)},
                    {"member", in_extension(ctx, fe, ideal)}};
    }).dump();
}

std::string op_dedekind_or(const std::string& f, OptLong d, OptStr m, const std::string& vars,
                           const std::string& rels, const std::string& budget) {
    return with_domain(d, m, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(vars, rels, expr_uses_y(ctx, f));
        auto fe = eval_element(ctx, alg, f);
        auto res = dedekind_or_check(ctx, fe, parse_budget(budget));
        json primes = json::array();
        for (const auto& p : res.primes) primes.push_back(ideal_to_json(p));
        return json{{"element", elem_to_json(ctx, fe)},
                    {"content", ideal_to_json(res.content_ideal)},
                    {"primes", primes},
                    {"bound_n", res.bound_n},
                    {"verified", res.verified}};
    }).dump();
}

std::string op_factor_ideal(const std::string& gens, OptLong d, OptStr m,
                            const std::string& budget) {
    return with_domain(d, m, [&](const auto& ctx) {
        auto ideal = ctx.ideal_of(parse_constant_list(ctx, gens));
        json jf = json::array();
        for (const auto& [p, e] : ctx.factor(ideal, parse_budget(budget)))
            jf.push_back(json{{"prime", ideal_to_json(p)}, {"exp", e}});
        return json{{"ideal", ideal_to_json(ideal)}, {"factors", jf}};
    }).dump();
}

std::string op_pair(bool weak, OptStr f, OptStr g, OptLong d, OptStr m, const std::string& vars,
                    const std::string& rels, uint64_t seed, long samples, long coeff_bound,
                    uint32_t degree_bound, const std::string& budget) {
    if (f.has_value() != g.has_value()) throw UsageError("f and g must be given together");
    return with_base(d, m, [&](const auto& ctx) {
        if (f) {
            bool uy = expr_uses_y(ctx, *f) || expr_uses_y(ctx, *g);
            AlgebraDesc alg = resolve_algebra(vars, rels, uy);
            auto fe = eval_element(ctx, alg, *f);
            auto ge = eval_element(ctx, alg, *g);
            VerdictReport r = weak ? weak_content_pair(ctx, fe, ge, parse_budget(budget))
                                   : gaussian_pair(ctx, fe, ge);
            auto cf = content(ctx, fe).ideal;
            auto cg = content(ctx, ge).ideal;
            auto cfg = content(ctx, fe * ge).ideal;
            auto prod = ctx.mul(cf, cg);
            json out{{"c_f", ideal_to_json(cf)},
                     {"c_g", ideal_to_json(cg)},
                     {"c_fg", ideal_to_json(cfg)},
                     {"product", ideal_to_json(prod)}};
            if (weak) {
                out["rad_c_fg"] = ideal_to_json(ctx.radical(cfg, parse_budget(budget)));
                out["rad_product"] = ideal_to_json(ctx.radical(prod, parse_budget(budget)));
            }
            out["report"] = r.to_json();
            return out;
        }
        AlgebraDesc alg = resolve_algebra(vars, rels, false);
        SampleConfig cfg = sampling(seed, samples, coeff_bound, degree_bound, budget);
        VerdictReport r = weak ? weak_content_sampled(ctx, alg, cfg)
                               : gaussian_sampled(ctx, alg, cfg);
        return json{{"report", r.to_json()}};
    }).dump();
}

std::string op_dm_exponent(const std::string& f, const std::string& g, unsigned long cap,
                           OptLong d, OptStr m, const std::string& vars,
                           const std::string& rels) {
    return with_base(d, m, [&](const auto& ctx) {
        bool uy = expr_uses_y(ctx, f) || expr_uses_y(ctx, g);
        AlgebraDesc alg = resolve_algebra(vars, rels, uy);
        auto fe = eval_element(ctx, alg, f);
        auto ge = eval_element(ctx, alg, g);
        DMExponent res = dm_exponent(ctx, fe, ge, cap);
        auto common = ctx.mul(ctx.pow(content(ctx, fe).ideal, res.n), content(ctx, ge).ideal);
        VerdictReport r{"dedekind-mertens", "holds-proven", nullptr, 0,
                        static_cast<long>(res.cap)};
        return json{{"n", res.n},
                    {"cap", res.cap},
                    {"common_value", ideal_to_json(common)},
                    {"report", r.to_json()}};
    }).dump();
}

std::string op_power_content(OptLong d, OptStr m, const std::string& vars,
                             const std::string& rels, uint64_t seed, long samples,
                             long coeff_bound, uint32_t degree_bound) {
    return with_domain(d, m, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(vars, rels, false);
        SampleConfig cfg = sampling(seed, samples, coeff_bound, degree_bound, "1000000");
        return json{{"report", power_content_check(ctx, alg, cfg).to_json()}};
    }).dump();
}

std::string op_prime_extension(const std::string& pgens, OptLong d, OptStr m,
                               const std::string& vars, const std::string& rels) {
    return with_base(d, m, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(vars, rels, false);
        auto p = ctx.ideal_of(parse_constant_list(ctx, pgens));
        return json{{"ideal", ideal_to_json(p)},
                    {"report", prime_extension_check(ctx, p, alg).to_json()}};
    }).dump();
}

std::string op_prop46(const std::string& f, const std::string& g, OptLong d, OptStr m,
                      const std::string& vars, const std::string& rels,
                      const std::string& budget) {
    return with_base(d, m, [&](const auto& ctx) {
        bool uy = expr_uses_y(ctx, f) || expr_uses_y(ctx, g);
        AlgebraDesc alg = resolve_algebra(vars, rels, uy);
        auto fe = eval_element(ctx, alg, f);
        auto ge = eval_element(ctx, alg, g);
        return json{
            {"report", prop46_condition_check(ctx, fe, ge, parse_budget(budget)).to_json()}};
    }).dump();
}

std::string op_dvr_base(const std::string& prime, const std::string& f) {
    Int p = int_from_string(prime);
    DvrBaseResult res = dvr_base_check(p, eval_rat_poly(f));
    return json{{"p", p.get_str()}, {"order", res.order}, {"report", res.report.to_json()}}
        .dump();
}

std::string op_transitivity(const std::string& rels_a, const std::string& rels_b) {
    std::vector<Exp> ra = rels_a.empty() ? std::vector<Exp>{} : parse_monomial_list(rels_a);
    std::vector<Exp> rb = rels_b.empty() ? std::vector<Exp>{} : parse_monomial_list(rels_b);
    TransitivityResult res = power_content_transitivity_check(ra, rb);
    return json{{"base_pc", res.base_pc},
                {"top_pc", res.top_pc},
                {"composite_pc", res.composite_pc},
                {"composite", res.composite},
                {"report", res.report.to_json()}}
        .dump();
}

std::string op_dim2(size_t prec, int characteristic) {
    return dim2_demo(prec, characteristic).machine.dump();
}

std::string op_node(size_t prec, uint32_t bound) { return node_demo(prec, bound).machine.dump(); }

std::string op_dvr_chain(const std::vector<std::string>& coeffs, const std::string& var,
                         size_t prec) {
    std::vector<Rat> c;
    for (const auto& s : coeffs) c.push_back(rat_from_string(s));
    TruncSeries<Rat> g(var, std::move(c));
    size_t T = prec ? prec : g.precision();
    ApproxContentChain chain = dvr_content_chain(g, T);
    json exps = json::array();
    for (size_t e : chain.exponents) exps.push_back(e);
    return json{{"series", series_to_json(g)},
                {"prec", chain.precision},
                {"exponents", exps},
                {"stabilization_index", chain.stabilization_index},
                {"order", chain.order},
                {"stable_ideal", chain.stable_ideal()}}
        .dump();
}

std::string op_xp(long bound) { return xp_demo(bound).machine.dump(); }

std::string op_eisenstein(const std::vector<std::pair<uint32_t, std::string>>& entries,
                          const std::string& pi_src) {
    Poly<Rat> pi_poly = eval_rat_poly(pi_src);
    if (pi_poly.degree_x() > 0)
        throw UsageError("pi must be an integer or a polynomial in y alone");

    bool result;
    std::string mode, pitext;
    json fj = json::array();
    if (pi_poly.degree_y() == 0) {
        Rat c = pi_poly.is_zero_poly() ? Rat(0) : pi_poly.terms().begin()->second;
        if (c.get_den() != 1)
            throw UsageError("pi must be an integer or a polynomial in y alone");
        Int pi = c.get_num();
        Poly<Int> f;
        for (const auto& [e, s] : entries) {
            Poly<Int> cp = eval_int_poly(s);
            if (cp.total_degree() > 0)
                throw UsageError("coefficient '" + s + "' must be a constant");
            f.add_term(Exp{e, 0}, cp.is_zero_poly() ? Int(0) : cp.terms().begin()->second);
        }
        result = eisenstein_check(f, pi);
        mode = "Z";
        pitext = pi.get_str();
        fj = poly_to_json(f);
    } else {
        Poly<Rat> f;
        for (const auto& [e, s] : entries) {
            Poly<Rat> cp = eval_rat_poly(s);
            if (cp.degree_x() > 0)
                throw UsageError("coefficient '" + s + "' must be a polynomial in y alone");
            for (const auto& [te, v] : cp.terms()) f.add_term(Exp{e, te.y}, v);
        }
        result = eisenstein_check(f, pi_poly);
        mode = "Q[y]";
        pitext = poly_to_string(pi_poly);
        for (const auto& [te, v] : f.terms())
            fj.push_back(json::array({te.x, te.y, coeff_string(v)}));
    }
    return json{{"mode", mode}, {"pi", pitext}, {"poly", fj}, {"eisenstein", result}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() =
        "exact content-ideal workbench core. Elements are written in the same "
        "grammar the command line uses: integers, w (the quadratic generator), "
        "x and y, operators + - * / ^, parentheses, juxtaposition as "
        "multiplication. Every function returns a JSON document as a string.";

    // exception mapping; translators run newest-first, so derived types go
    // after the base to take precedence
    py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
    py::register_exception<BudgetError>(mod, "BudgetError", PyExc_RuntimeError);
    py::register_exception<PrecisionError>(mod, "PrecisionError", PyExc_RuntimeError);
    py::register_exception<LiftingError>(mod, "LiftingError", PyExc_RuntimeError);
    py::register_exception<UsageError>(mod, "UsageError", PyExc_ValueError);

    using namespace py::literals;
    auto d_ = "d"_a = py::none();
    auto m_ = "m"_a = py::none();
    auto vars_ = "vars"_a = "";
    auto rels_ = "rels"_a = "";
    auto budget_ = "budget"_a = "1000000";

    mod.def("content", &op_content, "f"_a, d_, m_, vars_, rels_);
    mod.def("lf", &op_lf, "f"_a, "ideal"_a, d_, m_, vars_, rels_);
    mod.def("dedekind_or", &op_dedekind_or, "f"_a, d_, m_, vars_, rels_, budget_);
    mod.def("factor_ideal", &op_factor_ideal, "gens"_a, d_, m_, budget_);
    mod.def("gaussian",
            [](OptStr f, OptStr g, OptLong d, OptStr m, const std::string& vars,
               const std::string& rels, uint64_t seed, long samples, long coeff_bound,
               uint32_t degree_bound, const std::string& budget) {
                return op_pair(false, std::move(f), std::move(g), d, std::move(m), vars, rels,
                               seed, samples, coeff_bound, degree_bound, budget);
            },
            "f"_a = py::none(), "g"_a = py::none(), d_, m_, vars_, rels_, "seed"_a = 1,
            "samples"_a = 1000, "coeff_bound"_a = 20, "degree_bound"_a = 6, budget_);
    mod.def("weak_content",
            [](OptStr f, OptStr g, OptLong d, OptStr m, const std::string& vars,
               const std::string& rels, uint64_t seed, long samples, long coeff_bound,
               uint32_t degree_bound, const std::string& budget) {
                return op_pair(true, std::move(f), std::move(g), d, std::move(m), vars, rels,
                               seed, samples, coeff_bound, degree_bound, budget);
            },
            "f"_a = py::none(), "g"_a = py::none(), d_, m_, vars_, rels_, "seed"_a = 1,
            "samples"_a = 1000, "coeff_bound"_a = 20, "degree_bound"_a = 6, budget_);
    mod.def("dm_exponent", &op_dm_exponent, "f"_a, "g"_a, "cap"_a = 0, d_, m_, vars_, rels_);
    mod.def("power_content", &op_power_content, d_, m_, vars_, rels_, "seed"_a = 1,
            "samples"_a = 1000, "coeff_bound"_a = 20, "degree_bound"_a = 6);
    mod.def("prime_extension", &op_prime_extension, "p"_a, d_, m_, vars_, rels_);
    mod.def("prop46", &op_prop46, "f"_a, "g"_a, d_, m_, vars_, rels_, budget_);
    mod.def("dvr_base", &op_dvr_base, "prime"_a, "f"_a);
    mod.def("transitivity", &op_transitivity, "rels"_a = "", "rels2"_a = "");
    mod.def("dim2", &op_dim2, "prec"_a = 16, "characteristic"_a = 0);
    mod.def("node", &op_node, "prec"_a = 12, "bound"_a = 6);
    mod.def("dvr_chain", &op_dvr_chain, "coeffs"_a, "var"_a = "y", "prec"_a = 0);
    mod.def("xp", &op_xp, "bound"_a = 10);
    mod.def("eisenstein", &op_eisenstein, "entries"_a, "pi"_a);
}
