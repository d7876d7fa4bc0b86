// The command-line front door. One subcommand per operation; every run emits
// either human-readable text or (with --json) a single machine report that
// embeds the full run configuration, so a report is reproducible from its own
// bytes. Exit codes: 0 the property holds or the certificate was produced
// (expected-failure demos included), 1 a failure witness was found, 2 usage
// or budget trouble.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "orush/checkers.hpp"
#include "orush/completion.hpp"
#include "orush/content.hpp"
#include "orush/parse.hpp"
#include "orush/serial.hpp"

using namespace orush;

namespace {

struct RunConfig {
    uint64_t seed = 1;
    long samples = 1000;
    long coeff_bound = 20;
    uint32_t degree_bound = 6;
    size_t prec = 0;  // 0 until a precision-carrying command resolves its default
    std::string budget = "1000000";
    bool json_out = false;

    void validate() const {
        if (samples <= 0) throw UsageError("--samples must be positive");
        if (coeff_bound <= 0) throw UsageError("--coeff-bound must be positive");
        if (degree_bound == 0) throw UsageError("--degree-bound must be positive");
        Int b = int_from_string(budget);
        if (sgn(b) <= 0) throw UsageError("--budget must be positive");
    }

    Int budget_int() const { return int_from_string(budget); }

    SampleConfig sampling() const {
        SampleConfig s;
        s.seed = seed;
        s.samples = samples;
        s.coeff_bound = coeff_bound;
        s.degree_bound = degree_bound;
        s.budget = budget_int();
        return s;
    }

    json to_json() const {
        return json{{"seed", seed},
                    {"samples", samples},
                    {"coeff_bound", coeff_bound},
                    {"degree_bound", degree_bound},
                    {"prec", prec},
                    {"budget", budget},
                    {"format", json_out ? "json" : "text"}};
    }
};

void emit(const RunConfig& cfg, const std::string& command, const json& payload,
          const std::string& text) {
    if (cfg.json_out) {
        json out;
        out["command"] = command;
        out["config"] = cfg.to_json();
        for (const auto& [k, v] : payload.items()) out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// ----- shared option bundles

struct BaseOpt {
    long d = 0;
    std::string m;
    CLI::Option* od = nullptr;
    CLI::Option* om = nullptr;
};

void add_base_options(CLI::App* sub, BaseOpt& b, bool with_m = true) {
    b.od = sub->add_option("--d", b.d, "use the quadratic base Z[w], w^2 = d");
    if (with_m) {
        b.om = sub->add_option("--m", b.m, "use the modular base Z/m");
        b.od->excludes(b.om);
    }
}

// Run fn against the selected base ring context.
template <class F>
int with_base(const BaseOpt& b, F&& fn) {
    if (b.od && b.od->count() > 0) return fn(QuadRing(Int(b.d)));
    if (b.om && b.om->count() > 0) return fn(ZmRing(int_from_string(b.m)));
    return fn(ZRing());
}

// Same, for operations that need a domain with ideal factorization (no Z/m).
template <class F>
int with_domain(const BaseOpt& b, F&& fn) {
    if (b.od && b.od->count() > 0) return fn(QuadRing(Int(b.d)));
    return fn(ZRing());
}

struct AlgebraOpt {
    std::string vars;
    std::string rels;
};

void add_algebra_options(CLI::App* sub, AlgebraOpt& a) {
    sub->add_option("--vars", a.vars, "algebra variables: x or x,y (default: inferred)");
    sub->add_option("--rels", a.rels, "monomial relations, e.g. \"x^2\" or \"x*y, y^3\"");
}

// Variables come from --vars when given, otherwise from whether y shows up in
// the relations or in any of the parsed expressions.
AlgebraDesc resolve_algebra(const AlgebraOpt& opt, bool exprs_use_y) {
    std::vector<Exp> rels;
    if (!opt.rels.empty()) rels = parse_monomial_list(opt.rels);
    bool needs_y = exprs_use_y;
    for (const Exp& r : rels) needs_y = needs_y || r.y > 0;

    std::vector<std::string> vars;
    if (!opt.vars.empty()) {
        vars = split_list(opt.vars);
        if (vars != std::vector<std::string>{"x"} && vars != std::vector<std::string>{"x", "y"})
            throw UsageError("--vars must be \"x\" or \"x,y\"");
    } else {
        vars = needs_y ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x"};
    }
    return AlgebraDesc(vars, rels);
}

template <class Ctx>
bool expr_uses_y(const Ctx& ctx, const std::string& src) {
    return eval_poly(parse_expression(src), coeff_ops(ctx)).degree_y() > 0;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

TruncSeries<Rat> load_series(const std::string& path) {
    json j = load_json_file(path);
    if (!j.is_object() || !j.contains("var") || !j["var"].is_string())
        throw UsageError(path + ": missing or non-string field 'var'");
    if (!j.contains("prec") || !j["prec"].is_number_unsigned())
        throw UsageError(path + ": missing or non-integer field 'prec'");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw UsageError(path + ": missing or non-array field 'coeffs'");
    std::vector<Rat> c;
    for (const auto& e : j["coeffs"]) {
        if (!e.is_string())
            throw UsageError(path + ": field 'coeffs' must hold strings like \"3\" or \"1/2\"");
        c.push_back(rat_from_string(e.get<std::string>()));
    }
    if (c.size() != j["prec"].get<size_t>())
        throw UsageError(path + ": field 'prec' disagrees with the length of 'coeffs'");
    return TruncSeries<Rat>(j["var"].get<std::string>(), std::move(c));
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

template <class Ctx>
std::string header(const Ctx& ctx, const AlgebraDesc& alg) {
    return "base: " + ctx.name() + "\nalgebra: " + alg.to_string() + " with R = " + ctx.name() +
           "\n";
}

int verdict_exit(const VerdictReport& r) { return r.failed() ? 1 : 0; }

// ----- subcommand runners

int run_content(const BaseOpt& b, const AlgebraOpt& a, const std::string& fsrc, RunConfig& cfg) {
    return with_base(b, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(a, expr_uses_y(ctx, fsrc));
        auto f = eval_element(ctx, alg, fsrc);
        auto res = content(ctx, f);
        json coords = json::array();
        std::string coord_text;
        for (const auto& c : res.coords) {
            coords.push_back(ctx.coeff_str(c));
            if (!coord_text.empty()) coord_text += ", ";
            coord_text += ctx.coeff_str(c);
        }
        std::string text = header(ctx, alg) + "f = " + f.to_string(ctx) +
                           "\ncoordinates: " + (coord_text.empty() ? "none" : coord_text) +
                           "\nc(f) = " + ctx.ideal_str(res.ideal) + "\n";
        emit(cfg, "content",
             json{{"element", elem_to_json(ctx, f)},
                  {"coords", coords},
                  {"content", ideal_to_json(res.ideal)}},
             text);
        return 0;
    });
}

int run_lf(const BaseOpt& b, const AlgebraOpt& a, const std::string& fsrc,
           const std::string& gens, RunConfig& cfg) {
    return with_base(b, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(a, expr_uses_y(ctx, fsrc));
        auto f = eval_element(ctx, alg, fsrc);
        auto ideal = ctx.ideal_of(parse_constant_list(ctx, gens));
        bool member = in_extension(ctx, f, ideal);
        std::string text = header(ctx, alg) + "f = " + f.to_string(ctx) +
                           "\nI = " + ctx.ideal_str(ideal) +
                           "\nf in I*S (I in L_f): " + yesno(member) + "\n";
        emit(cfg, "lf",
             json{{"element", elem_to_json(ctx, f)},
                  {"ideal", ideal_to_json(ideal)},
                  {"member", member}},
             text);
        return member ? 0 : 1;
    });
}

int run_dedekind_or(const BaseOpt& b, const AlgebraOpt& a, const std::string& fsrc,
                    RunConfig& cfg) {
    return with_domain(b, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(a, expr_uses_y(ctx, fsrc));
        auto f = eval_element(ctx, alg, fsrc);
        auto res = dedekind_or_check(ctx, f, cfg.budget_int());
        json primes = json::array();
        std::string prime_text;
        for (const auto& p : res.primes) {
            primes.push_back(ideal_to_json(p));
            if (!prime_text.empty()) prime_text += ", ";
            prime_text += ctx.ideal_str(p);
        }
        std::string text = header(ctx, alg) + "f = " + f.to_string(ctx) +
                           "\nc(f) = " + ctx.ideal_str(res.content_ideal) +
                           "\nprimes p with f in p*S: " +
                           (prime_text.empty() ? "none" : prime_text) +
                           "\nbound n = " + std::to_string(res.bound_n) +
                           " (f stays outside p^n*S for each prime above)" +
                           "\nmembership re-verified: " + yesno(res.verified) + "\n";
        emit(cfg, "dedekind-or",
             json{{"element", elem_to_json(ctx, f)},
                  {"content", ideal_to_json(res.content_ideal)},
                  {"primes", primes},
                  {"bound_n", res.bound_n},
                  {"verified", res.verified}},
             text);
        return res.verified ? 0 : 1;
    });
}

int run_factor_ideal(const BaseOpt& b, const std::string& gens, RunConfig& cfg) {
    return with_domain(b, [&](const auto& ctx) {
        auto ideal = ctx.ideal_of(parse_constant_list(ctx, gens));
        auto factors = ctx.factor(ideal, cfg.budget_int());
        json jf = json::array();
        std::string prod;
        for (const auto& [p, e] : factors) {
            jf.push_back(json{{"prime", ideal_to_json(p)}, {"exp", e}});
            if (!prod.empty()) prod += " * ";
            prod += ctx.ideal_str(p);
            if (e > 1) prod += "^" + std::to_string(e);
        }
        std::string text = "base: " + ctx.name() + "\nI = " + ctx.ideal_str(ideal) +
                           "\nfactorization: " + (prod.empty() ? "empty (unit ideal)" : prod) +
                           "\n";
        emit(cfg, "factor-ideal",
             json{{"ideal", ideal_to_json(ideal)}, {"factors", jf}}, text);
        return 0;
    });
}

// gaussian and weak-content share their shape: an exact pair mode when --f
// and --g are given, a seeded sampling mode otherwise.
int run_pair_checker(const std::string& name, const BaseOpt& b, const AlgebraOpt& a,
                     const CLI::Option* of, const CLI::Option* og, const std::string& fsrc,
                     const std::string& gsrc, RunConfig& cfg) {
    return with_base(b, [&](const auto& ctx) {
        bool has_f = of->count() > 0, has_g = og->count() > 0;
        if (has_f != has_g) throw UsageError("--f and --g must be given together");
        bool weak = name == "weak-content";

        if (has_f) {
            bool uy = expr_uses_y(ctx, fsrc) || expr_uses_y(ctx, gsrc);
            AlgebraDesc alg = resolve_algebra(a, uy);
            auto f = eval_element(ctx, alg, fsrc);
            auto g = eval_element(ctx, alg, gsrc);
            VerdictReport r = weak ? weak_content_pair(ctx, f, g, cfg.budget_int())
                                   : gaussian_pair(ctx, f, g);
            auto cf = content(ctx, f).ideal;
            auto cg = content(ctx, g).ideal;
            auto cfg_ideal = content(ctx, f * g).ideal;
            auto prod = ctx.mul(cf, cg);
            std::string text = header(ctx, alg) + "f = " + f.to_string(ctx) +
                               "\ng = " + g.to_string(ctx) + "\nc(f) = " + ctx.ideal_str(cf) +
                               "\nc(g) = " + ctx.ideal_str(cg) +
                               "\nc(fg) = " + ctx.ideal_str(cfg_ideal) +
                               "\nc(f)*c(g) = " + ctx.ideal_str(prod) + "\n";
            json payload{{"c_f", ideal_to_json(cf)},
                         {"c_g", ideal_to_json(cg)},
                         {"c_fg", ideal_to_json(cfg_ideal)},
                         {"product", ideal_to_json(prod)}};
            if (weak) {
                auto radl = ctx.radical(cfg_ideal, cfg.budget_int());
                auto radr = ctx.radical(prod, cfg.budget_int());
                text += "rad c(fg) = " + ctx.ideal_str(radl) +
                        "\nrad c(f)c(g) = " + ctx.ideal_str(radr) + "\n";
                payload["rad_c_fg"] = ideal_to_json(radl);
                payload["rad_product"] = ideal_to_json(radr);
            }
            text += "verdict: " + r.verdict + "\n";
            payload["report"] = r.to_json();
            emit(cfg, name, payload, text);
            return verdict_exit(r);
        }

        AlgebraDesc alg = resolve_algebra(a, false);
        VerdictReport r = weak ? weak_content_sampled(ctx, alg, cfg.sampling())
                               : gaussian_sampled(ctx, alg, cfg.sampling());
        std::string text = header(ctx, alg) + "samples: " + std::to_string(cfg.samples) +
                           " (seed " + std::to_string(cfg.seed) + ")\nverdict: " + r.verdict +
                           "\n";
        if (r.failed()) text += "witness: " + r.witness.dump() + "\n";
        emit(cfg, name, json{{"report", r.to_json()}}, text);
        return verdict_exit(r);
    });
}

int run_dm_exponent(const BaseOpt& b, const AlgebraOpt& a, const std::string& fsrc,
                    const std::string& gsrc, unsigned long cap, RunConfig& cfg) {
    return with_base(b, [&](const auto& ctx) {
        bool uy = expr_uses_y(ctx, fsrc) || expr_uses_y(ctx, gsrc);
        AlgebraDesc alg = resolve_algebra(a, uy);
        auto f = eval_element(ctx, alg, fsrc);
        auto g = eval_element(ctx, alg, gsrc);
        DMExponent res = dm_exponent(ctx, f, g, cap);
        auto cf = content(ctx, f).ideal;
        auto common = ctx.mul(ctx.pow(cf, res.n), content(ctx, g).ideal);
        VerdictReport r{"dedekind-mertens", "holds-proven", nullptr, 0,
                        static_cast<long>(res.cap)};
        std::string text =
            header(ctx, alg) + "f = " + f.to_string(ctx) + "\ng = " + g.to_string(ctx) +
            "\nn = " + std::to_string(res.n) + " (cap " + std::to_string(res.cap) + ")" +
            "\nc(f)^" + std::to_string(res.n) + " c(g) = c(f)^" + std::to_string(res.n - 1) +
            " c(fg) = " + ctx.ideal_str(common) + "\n";
        emit(cfg, "dm-exponent",
             json{{"n", res.n},
                  {"cap", res.cap},
                  {"common_value", ideal_to_json(common)},
                  {"report", r.to_json()}},
             text);
        return 0;
    });
}

int run_power_content(const BaseOpt& b, const AlgebraOpt& a, RunConfig& cfg) {
    return with_domain(b, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(a, false);
        VerdictReport r = power_content_check(ctx, alg, cfg.sampling());
        std::string text = header(ctx, alg) + "property: power-content\nverdict: " + r.verdict +
                           "\n";
        if (r.failed())
            text += "witness: f = " + r.witness["f"]["terms"][0][0].get<std::string>() +
                    ", f^" + std::to_string(r.witness["n"].get<unsigned long>()) +
                    " = 0 but f is not in (0)S\n";
        emit(cfg, "power-content", json{{"report", r.to_json()}}, text);
        return verdict_exit(r);
    });
}

int run_prime_extension(const BaseOpt& b, const AlgebraOpt& a, const std::string& pgens,
                        RunConfig& cfg) {
    return with_base(b, [&](const auto& ctx) {
        AlgebraDesc alg = resolve_algebra(a, false);
        auto p = ctx.ideal_of(parse_constant_list(ctx, pgens));
        VerdictReport r = prime_extension_check(ctx, p, alg);
        std::string text = header(ctx, alg) + "p = " + ctx.ideal_str(p) +
                           "\nproperty: prime-extension\nverdict: " + r.verdict + "\n";
        if (r.failed()) {
            auto zd = r.witness["zero_divisors"];
            text += "zero divisors mod p*S: " + zd[0].get<std::string>() + " * " +
                    zd[1].get<std::string>() + " = 0\n";
        }
        emit(cfg, "prime-extension",
             json{{"ideal", ideal_to_json(p)}, {"report", r.to_json()}}, text);
        return verdict_exit(r);
    });
}

int run_prop46(const BaseOpt& b, const AlgebraOpt& a, const std::string& fsrc,
               const std::string& gsrc, RunConfig& cfg) {
    return with_base(b, [&](const auto& ctx) {
        bool uy = expr_uses_y(ctx, fsrc) || expr_uses_y(ctx, gsrc);
        AlgebraDesc alg = resolve_algebra(a, uy);
        auto f = eval_element(ctx, alg, fsrc);
        auto g = eval_element(ctx, alg, gsrc);
        VerdictReport r = prop46_condition_check(ctx, f, g, cfg.budget_int());
        std::string text = header(ctx, alg) + "f = " + f.to_string(ctx) +
                           "\ng = " + g.to_string(ctx) +
                           "\nproperty: c(I) cap c(J) inside rad c(I cap J), I = (f), J = (g)" +
                           "\nverdict: " + r.verdict + "\n";
        if (r.failed()) text += "witness: " + r.witness.dump() + "\n";
        emit(cfg, "prop46", json{{"report", r.to_json()}}, text);
        return verdict_exit(r);
    });
}

int run_dvr_base(const std::string& prime, const std::string& fsrc, RunConfig& cfg) {
    Int p = int_from_string(prime);
    Poly<Rat> f = eval_rat_poly(fsrc);
    DvrBaseResult res = dvr_base_check(p, f);
    std::string text = "base: Z localized at (" + p.get_str() + ")\nf = " +
                       poly_to_string(f) + "\norder of f at p: " + std::to_string(res.order) +
                       " (f in p^" + std::to_string(res.order) + "*S, not in p^" +
                       std::to_string(res.order + 1) + "*S)" +
                       "\np*S prime: yes\nverdict: " + res.report.verdict + "\n";
    emit(cfg, "dvr-base",
         json{{"p", p.get_str()},
              {"order", res.order},
              {"report", res.report.to_json()}},
         text);
    return verdict_exit(res.report);
}

int run_transitivity(const std::string& rels_a, const std::string& rels_b, RunConfig& cfg) {
    std::vector<Exp> ra = rels_a.empty() ? std::vector<Exp>{} : parse_monomial_list(rels_a);
    std::vector<Exp> rb = rels_b.empty() ? std::vector<Exp>{} : parse_monomial_list(rels_b);
    TransitivityResult res = power_content_transitivity_check(ra, rb);
    AlgebraDesc base({"x"}, ra);
    std::string text = "base A = " + base.to_string() +
                       ": power-content " + (res.base_pc ? "holds" : "fails") +
                       "\ntop B = A[y]/(" + (rels_b.empty() ? "" : rels_b) +
                       "): power-content " + (res.top_pc ? "holds" : "fails") +
                       "\ncomposite " + res.composite + ": power-content " +
                       (res.composite_pc ? "holds" : "fails") +
                       "\nimplication pc(A) and pc(B) => pc(composite): " + res.report.verdict +
                       "\n";
    emit(cfg, "transitivity",
         json{{"base_pc", res.base_pc},
              {"top_pc", res.top_pc},
              {"composite_pc", res.composite_pc},
              {"composite", res.composite},
              {"report", res.report.to_json()}},
         text);
    return verdict_exit(res.report);
}

int run_dim2(int characteristic, RunConfig& cfg) {
    size_t T = cfg.prec ? cfg.prec : 16;
    cfg.prec = T;
    Dim2Report rep = dim2_demo(T, characteristic);
    emit(cfg, "dim2", rep.machine, rep.text);
    return 0;
}

int run_node(uint32_t bound, RunConfig& cfg) {
    size_t T = cfg.prec ? cfg.prec : 12;
    cfg.prec = T;
    NodeReport rep = node_demo(T, bound);
    emit(cfg, "node", rep.machine, rep.text);
    return 0;
}

int run_dvr_chain(const std::string& path, RunConfig& cfg) {
    TruncSeries<Rat> g = load_series(path);
    size_t T = cfg.prec ? cfg.prec : g.precision();
    cfg.prec = T;
    ApproxContentChain chain = dvr_content_chain(g, T);
    json exps = json::array();
    std::string chain_text;
    for (size_t e : chain.exponents) {
        exps.push_back(e);
        if (!chain_text.empty()) chain_text += " ";
        chain_text += std::to_string(e);
    }
    std::string text = "g = " + to_string(g) + "\nI_t = (g mod " + chain.var + "^t) + (" +
                       chain.var + "^t), exponents for t = 1.." + std::to_string(T) + ": " +
                       chain_text + "\nstabilizes at t = " +
                       std::to_string(chain.stabilization_index) +
                       "\nstable content ideal: " + chain.stable_ideal() + " (order " +
                       std::to_string(chain.order) + ")\n";
    emit(cfg, "dvr-chain",
         json{{"series", series_to_json(g)},
              {"prec", chain.precision},
              {"exponents", exps},
              {"stabilization_index", chain.stabilization_index},
              {"order", chain.order},
              {"stable_ideal", chain.stable_ideal()}},
         text);
    return 0;
}

int run_xp(long bound, RunConfig& cfg) {
    XpReport rep = xp_demo(bound);
    emit(cfg, "xp", rep.machine, rep.text);
    return 0;
}

int run_eisenstein(const std::string& path, const std::string& pi_src, RunConfig& cfg) {
    Poly<Rat> pi_poly = eval_rat_poly(pi_src);
    if (pi_poly.degree_x() > 0)
        throw UsageError("--prime must be an integer or a polynomial in y alone");

    json j = load_json_file(path);
    if (!j.is_array())
        throw UsageError(path + ": expected an array of [exponent, coefficient] pairs");
    std::vector<std::pair<uint32_t, std::string>> entries;
    for (size_t k = 0; k < j.size(); ++k) {
        const auto& e = j[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_string())
            throw UsageError(path + ": entry " + std::to_string(k) +
                             " must be [exponent, \"coefficient\"]");
        entries.emplace_back(e[0].get<uint32_t>(), e[1].get<std::string>());
    }

    bool result;
    std::string mode, ftext, pitext;
    json fj = json::array();
    if (pi_poly.degree_y() == 0) {
        // integer mode: pi a rational prime, coefficients integers
        Rat c = pi_poly.is_zero_poly() ? Rat(0) : pi_poly.terms().begin()->second;
        if (c.get_den() != 1)
            throw UsageError("--prime must be an integer or a polynomial in y alone");
        Int pi = c.get_num();
        Poly<Int> f;
        for (const auto& [e, s] : entries) {
            Poly<Int> cp = eval_int_poly(s);
            if (cp.total_degree() > 0)
                throw UsageError(path + ": coefficient '" + s + "' must be a constant");
            f.add_term(Exp{e, 0},
                       cp.is_zero_poly() ? Int(0) : cp.terms().begin()->second);
        }
        result = eisenstein_check(f, pi);
        mode = "Z";
        ftext = poly_to_string(f);
        pitext = pi.get_str();
        fj = poly_to_json(f);
    } else {
        // k[y] mode: pi in Q[y], coefficients polynomials in y
        Poly<Rat> f;
        for (const auto& [e, s] : entries) {
            Poly<Rat> cp = eval_rat_poly(s);
            if (cp.degree_x() > 0)
                throw UsageError(path + ": coefficient '" + s +
                                 "' must be a polynomial in y alone");
            for (const auto& [te, v] : cp.terms()) f.add_term(Exp{e, te.y}, v);
        }
        result = eisenstein_check(f, pi_poly);
        mode = "Q[y]";
        ftext = poly_to_string(f);
        pitext = poly_to_string(pi_poly);
        for (const auto& [te, v] : f.terms())
            fj.push_back(json::array({te.x, te.y, coeff_string(v)}));
    }

    std::string text = "mode: coefficients in " + mode + "\nf = " + ftext + "\npi = " + pitext +
                       "\neisenstein at pi: " + (result ? "satisfied" : "not satisfied") + "\n";
    emit(cfg, "eisenstein",
         json{{"mode", mode}, {"pi", pitext}, {"poly", fj}, {"eisenstein", result}}, text);
    return result ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--seed", cfg.seed, "RNG seed for sampling modes");
    sub->add_option("--samples", cfg.samples, "sample budget for sampling modes");
    sub->add_option("--coeff-bound", cfg.coeff_bound, "random coefficient bound");
    sub->add_option("--degree-bound", cfg.degree_bound, "random element degree bound");
    sub->add_option("--budget", cfg.budget, "factorization effort budget");
    sub->add_flag("--json", cfg.json_out, "emit one machine-readable JSON report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact content-ideal workbench"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::pair<const CLI::App*, std::function<int()>>> runners;

    // content
    {
        auto* sub = app.add_subcommand("content", "content ideal c(f) and its coordinates");
        auto b = std::make_shared<BaseOpt>();
        auto a = std::make_shared<AlgebraOpt>();
        auto fsrc = std::make_shared<std::string>();
        add_base_options(sub, *b);
        add_algebra_options(sub, *a);
        sub->add_option("--f", *fsrc, "element of S")->required();
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, b, a, fsrc] { return run_content(*b, *a, *fsrc, cfg); });
    }

    // lf
    {
        auto* sub = app.add_subcommand("lf", "membership of an ideal in L_f, i.e. f in I*S");
        auto b = std::make_shared<BaseOpt>();
        auto a = std::make_shared<AlgebraOpt>();
        auto fsrc = std::make_shared<std::string>();
        auto gens = std::make_shared<std::string>();
        add_base_options(sub, *b);
        add_algebra_options(sub, *a);
        sub->add_option("--f", *fsrc, "element of S")->required();
        sub->add_option("--ideal", *gens, "base ideal generators, e.g. \"2, 1+w\"")->required();
        add_common(sub, cfg);
        runners.emplace_back(sub,
                             [&cfg, b, a, fsrc, gens] { return run_lf(*b, *a, *fsrc, *gens, cfg); });
    }

    // dedekind-or
    {
        auto* sub = app.add_subcommand(
            "dedekind-or", "finite-prime description of L_f over Z or a quadratic order");
        auto b = std::make_shared<BaseOpt>();
        auto a = std::make_shared<AlgebraOpt>();
        auto fsrc = std::make_shared<std::string>();
        add_base_options(sub, *b, false);
        add_algebra_options(sub, *a);
        sub->add_option("--f", *fsrc, "element of S")->required();
        add_common(sub, cfg);
        runners.emplace_back(sub,
                             [&cfg, b, a, fsrc] { return run_dedekind_or(*b, *a, *fsrc, cfg); });
    }

    // factor-ideal
    {
        auto* sub = app.add_subcommand("factor-ideal", "prime factorization of a base ideal");
        auto b = std::make_shared<BaseOpt>();
        auto gens = std::make_shared<std::string>();
        add_base_options(sub, *b, false);
        sub->add_option("--gens", *gens, "ideal generators, e.g. \"6\" or \"2, 1+w\"")
            ->required();
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, b, gens] { return run_factor_ideal(*b, *gens, cfg); });
    }

    // gaussian / weak-content
    for (const char* name : {"gaussian", "weak-content"}) {
        std::string desc = std::string(name) == "gaussian"
                               ? "c(fg) = c(f)c(g), exact pair or seeded samples"
                               : "rad c(fg) = rad c(f)c(g), exact pair or seeded samples";
        auto* sub = app.add_subcommand(name, desc);
        auto b = std::make_shared<BaseOpt>();
        auto a = std::make_shared<AlgebraOpt>();
        auto fsrc = std::make_shared<std::string>();
        auto gsrc = std::make_shared<std::string>();
        add_base_options(sub, *b);
        add_algebra_options(sub, *a);
        CLI::Option* of = sub->add_option("--f", *fsrc, "first element (pair mode)");
        CLI::Option* og = sub->add_option("--g", *gsrc, "second element (pair mode)");
        add_common(sub, cfg);
        std::string cmd = name;
        runners.emplace_back(sub, [&cfg, cmd, b, a, of, og, fsrc, gsrc] {
            return run_pair_checker(cmd, *b, *a, of, og, *fsrc, *gsrc, cfg);
        });
    }

    // dm-exponent
    {
        auto* sub = app.add_subcommand("dm-exponent",
                                       "least n with c(f)^n c(g) = c(f)^(n-1) c(fg)");
        auto b = std::make_shared<BaseOpt>();
        auto a = std::make_shared<AlgebraOpt>();
        auto fsrc = std::make_shared<std::string>();
        auto gsrc = std::make_shared<std::string>();
        auto cap = std::make_shared<unsigned long>(0);
        add_base_options(sub, *b);
        add_algebra_options(sub, *a);
        sub->add_option("--f", *fsrc, "first element")->required();
        sub->add_option("--g", *gsrc, "second element")->required();
        sub->add_option("--cap", *cap, "search cap (default: deg g + 2)");
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, b, a, fsrc, gsrc, cap] {
            return run_dm_exponent(*b, *a, *fsrc, *gsrc, *cap, cfg);
        });
    }

    // power-content
    {
        auto* sub = app.add_subcommand(
            "power-content", "do radical base ideals extend to radical ideals of S?");
        auto b = std::make_shared<BaseOpt>();
        auto a = std::make_shared<AlgebraOpt>();
        add_base_options(sub, *b, false);  // needs a domain base
        add_algebra_options(sub, *a);
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, b, a] { return run_power_content(*b, *a, cfg); });
    }

    // prime-extension
    {
        auto* sub = app.add_subcommand("prime-extension", "does a prime p stay prime in S?");
        auto b = std::make_shared<BaseOpt>();
        auto a = std::make_shared<AlgebraOpt>();
        auto pgens = std::make_shared<std::string>();
        add_base_options(sub, *b);
        add_algebra_options(sub, *a);
        sub->add_option("--p", *pgens, "prime ideal generators")->required();
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, b, a, pgens] {
            return run_prime_extension(*b, *a, *pgens, cfg);
        });
    }

    // prop46
    {
        auto* sub = app.add_subcommand(
            "prop46", "principal intersections: c(I) cap c(J) inside rad c(I cap J)");
        auto b = std::make_shared<BaseOpt>();
        auto a = std::make_shared<AlgebraOpt>();
        auto fsrc = std::make_shared<std::string>();
        auto gsrc = std::make_shared<std::string>();
        add_base_options(sub, *b);
        add_algebra_options(sub, *a);
        sub->add_option("--f", *fsrc, "generator of I")->required();
        sub->add_option("--g", *gsrc, "generator of J")->required();
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, b, a, fsrc, gsrc] {
            return run_prop46(*b, *a, *fsrc, *gsrc, cfg);
        });
    }

    // dvr-base
    {
        auto* sub = app.add_subcommand(
            "dvr-base", "p-adic order of f and primality of p*S over Z localized at p");
        auto prime = std::make_shared<std::string>();
        auto fsrc = std::make_shared<std::string>();
        sub->add_option("--prime", *prime, "rational prime p")->required();
        sub->add_option("--f", *fsrc, "polynomial with rational coefficients")->required();
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, prime, fsrc] { return run_dvr_base(*prime, *fsrc, cfg); });
    }

    // transitivity
    {
        auto* sub = app.add_subcommand(
            "transitivity", "power content for base, top, and composite relation sets");
        auto ra = std::make_shared<std::string>();
        auto rb = std::make_shared<std::string>();
        sub->add_option("--rels", *ra, "base relations, monomials in x");
        sub->add_option("--rels2", *rb, "top relations, monomials in x and y");
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, ra, rb] { return run_transitivity(*ra, *rb, cfg); });
    }

    // dim2
    {
        auto* sub = app.add_subcommand(
            "dim2", "two-dimensional completion demo: Eisenstein target splits after completion");
        auto ch = std::make_shared<int>(0);
        sub->add_option("--char", *ch, "characteristic, 0 or 2");
        sub->add_option("--prec", cfg.prec, "series precision (default 16)");
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, ch] { return run_dim2(*ch, cfg); });
    }

    // node
    {
        auto* sub = app.add_subcommand(
            "node", "nodal curve demo: two analytic branches, injective branch map");
        auto bound = std::make_shared<uint32_t>(6);
        sub->add_option("--prec", cfg.prec, "series precision (default 12)");
        sub->add_option("--bound", *bound, "monomial basis degree bound (default 6)");
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, bound] { return run_node(*bound, cfg); });
    }

    // dvr-chain
    {
        auto* sub = app.add_subcommand(
            "dvr-chain", "content approximation chain of a series over k[y] at (y)");
        auto path = std::make_shared<std::string>();
        sub->add_option("--series", *path, "series file: {\"var\", \"prec\", \"coeffs\"}")
            ->required();
        sub->add_option("--prec", cfg.prec, "chain length (default: the file's precision)");
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, path] { return run_dvr_chain(*path, cfg); });
    }

    // xp
    {
        auto* sub = app.add_subcommand(
            "xp", "the x/p example: local containments whose meet collapses globally");
        auto bound = std::make_shared<long>(10);
        sub->add_option("--bound", *bound, "use all primes p <= bound (default 10)");
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, bound] { return run_xp(*bound, cfg); });
    }

    // eisenstein
    {
        auto* sub = app.add_subcommand("eisenstein",
                                       "Eisenstein criterion over Z or over Q[y] at pi");
        auto path = std::make_shared<std::string>();
        auto pi = std::make_shared<std::string>();
        sub->add_option("--poly", *path, "polynomial file: [[exponent, \"coeff\"], ...]")
            ->required();
        sub->add_option("--prime", *pi, "pi: an integer prime or a polynomial in y")->required();
        add_common(sub, cfg);
        runners.emplace_back(sub, [&cfg, path, pi] { return run_eisenstein(*path, *pi, cfg); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (const char* env = std::getenv("ORUSH_SEED")) {
            char* end = nullptr;
            errno = 0;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (errno != 0 || end == env || *end != '\0')
                throw UsageError("ORUSH_SEED must be a nonnegative integer");
            cfg.seed = v;
        }
        cfg.validate();
        for (const auto& [sub, run] : runners)
            if (sub->parsed()) return run();
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const LiftingError& e) {
        std::cerr << "lifting error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
