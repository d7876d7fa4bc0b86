#pragma once

// Base-ring contexts: Z, Z/m, and a quadratic order Z[sqrt(d)], each bundling
// a coefficient type with its ideal arithmetic behind one vocabulary so the
// content machinery and the checkers are written once. Contexts are small
// values; pass them by const reference alongside elements.

#include <string>
#include <utility>
#include <vector>

#include "orush/errors.hpp"
#include "orush/idealz.hpp"
#include "orush/modint.hpp"
#include "orush/numeric.hpp"
#include "orush/quad.hpp"
#include "orush/quadideal.hpp"
#include "orush/rng.hpp"

namespace orush {

struct ZRing {
    using Coeff = Int;
    using Ideal = IdealZ;

    std::string name() const { return "Z"; }

    Coeff from_int(const Int& n) const { return n; }
    Coeff random(Rng& rng, long bound) const { return Int(rng.uniform(-bound, bound)); }

    Ideal ideal_of(const std::vector<Coeff>& gens) const {
        Int g = 0;
        for (const auto& x : gens) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        return IdealZ(g);
    }
    Ideal zero_ideal() const { return IdealZ(Int(0)); }
    Ideal unit_ideal() const { return IdealZ(Int(1)); }

    Ideal mul(const Ideal& i, const Ideal& j) const { return i * j; }
    Ideal add(const Ideal& i, const Ideal& j) const { return i + j; }
    Ideal intersect(const Ideal& i, const Ideal& j) const { return i.intersect(j); }
    Ideal pow(const Ideal& i, unsigned long n) const { return i.pow(n); }
    Ideal radical(const Ideal& i, const Int& budget) const { return i.radical(budget); }
    bool contains(const Ideal& i, const Coeff& x) const { return i.contains(x); }
    bool contains(const Ideal& i, const Ideal& j) const { return i.contains(j); }

    // prime ideals dividing i, with multiplicity
    std::vector<std::pair<Ideal, long>> factor(const Ideal& i, const Int& budget) const {
        std::vector<std::pair<Ideal, long>> out;
        for (const auto& [p, e] : factor_int(i.gen(), budget)) out.emplace_back(IdealZ(p), e);
        return out;
    }
    bool is_prime_ideal(const Ideal& i) const { return i.is_zero() || is_prime(i.gen()); }
    // some prime ideals not containing i, for spot checks
    std::vector<Ideal> spot_primes(const Ideal& i, size_t count) const {
        std::vector<Ideal> out;
        for (long p : sieve_primes(200)) {
            if (out.size() >= count) break;
            IdealZ q(p);
            if (!q.contains(i)) out.push_back(q);
        }
        return out;
    }

    std::string coeff_str(const Coeff& x) const { return x.get_str(); }
    std::string ideal_str(const Ideal& i) const { return i.to_string(); }
};

struct ZmRing {
    explicit ZmRing(Int m) : m_(std::move(m)) {
        if (m_ < 2) throw UsageError("ZmRing: modulus must be >= 2");
    }

    using Coeff = ModInt;
    using Ideal = IdealZm;

    const Int& modulus() const { return m_; }
    std::string name() const { return "Z/" + m_.get_str(); }

    Coeff from_int(const Int& n) const { return ModInt(n, m_); }
    Coeff random(Rng& rng, long bound) const {
        return ModInt(Int(rng.uniform(-bound, bound)), m_);
    }

    Ideal ideal_of(const std::vector<Coeff>& gens) const {
        Int g = 0;
        for (const auto& x : gens)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.residue().get_mpz_t());
        return IdealZm(m_, g);
    }
    Ideal zero_ideal() const { return IdealZm(m_, Int(0)); }
    Ideal unit_ideal() const { return IdealZm(m_, Int(1)); }

    Ideal mul(const Ideal& i, const Ideal& j) const { return i * j; }
    Ideal add(const Ideal& i, const Ideal& j) const { return i + j; }
    Ideal intersect(const Ideal& i, const Ideal& j) const { return i.intersect(j); }
    Ideal pow(const Ideal& i, unsigned long n) const { return i.pow(n); }
    Ideal radical(const Ideal& i, const Int& budget) const { return i.radical(budget); }
    bool contains(const Ideal& i, const Coeff& x) const { return i.contains(x.residue()); }
    bool contains(const Ideal& i, const Ideal& j) const { return i.contains(j); }
    // (g)/m is prime exactly when the quotient Z/g is a domain
    bool is_prime_ideal(const Ideal& i) const { return is_prime(i.gen()); }

    std::string coeff_str(const Coeff& x) const { return to_string(x); }
    std::string ideal_str(const Ideal& i) const { return i.to_string(); }

private:
    Int m_;
};

struct QuadRing {
    explicit QuadRing(Int d) : d_(std::move(d)) { detail::require_order_param(d_); }

    using Coeff = QuadElem;
    using Ideal = QuadIdeal;

    const Int& d() const { return d_; }
    std::string name() const { return "Z[w], w^2=" + d_.get_str(); }
    bool maximal() const { return mpz_fdiv_ui(d_.get_mpz_t(), 4) != 1; }

    Coeff from_int(const Int& n) const { return QuadElem(n, 0, d_); }
    Coeff random(Rng& rng, long bound) const {
        Int a(rng.uniform(-bound, bound));
        Int b(rng.uniform(-bound, bound));
        return QuadElem(a, b, d_);
    }

    Ideal ideal_of(const std::vector<Coeff>& gens) const { return hnf_from_generators(d_, gens); }
    Ideal zero_ideal() const { return QuadIdeal::zero(d_); }
    Ideal unit_ideal() const { return QuadIdeal::unit(d_); }

    Ideal mul(const Ideal& i, const Ideal& j) const { return ideal_mul(i, j); }
    Ideal add(const Ideal& i, const Ideal& j) const { return ideal_add(i, j); }
    Ideal intersect(const Ideal& i, const Ideal& j) const { return ideal_intersect(i, j); }
    Ideal pow(const Ideal& i, unsigned long n) const { return ideal_pow(i, n); }
    Ideal radical(const Ideal& i, const Int& budget) const { return ideal_radical(i, budget); }
    bool contains(const Ideal& i, const Coeff& x) const { return i.contains(x); }
    bool contains(const Ideal& i, const Ideal& j) const { return i.contains(j); }

    std::vector<std::pair<Ideal, long>> factor(const Ideal& i, const Int& budget) const {
        std::vector<std::pair<Ideal, long>> out;
        for (const auto& f : factor_ideal(i, budget))
            out.emplace_back(f.prime, static_cast<long>(f.exp));
        return out;
    }
    // prime norm means a field quotient; (p) for an inert rational prime is
    // the only other prime shape in a quadratic order
    bool is_prime_ideal(const Ideal& i) const {
        if (i.is_zero()) return true;
        if (i.is_unit()) return false;
        Int n = i.norm();
        if (is_prime(n)) return true;
        if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
        Int p;
        mpz_sqrt(p.get_mpz_t(), n.get_mpz_t());
        if (!is_prime(p) || i.a() != p || sgn(i.b()) != 0 || i.c() != p) return false;
        if (p == 2 || mpz_divisible_p(d_.get_mpz_t(), p.get_mpz_t())) return false;  // ramified
        return mpz_legendre(d_.get_mpz_t(), p.get_mpz_t()) == -1;  // inert
    }
    std::vector<Ideal> spot_primes(const Ideal& i, size_t count) const {
        std::vector<Ideal> out;
        for (long p : sieve_primes(200)) {
            if (out.size() >= count) break;
            for (const auto& q : split_prime(d_, p).primes) {
                if (out.size() >= count) break;
                if (!q.contains(i)) out.push_back(q);
            }
        }
        return out;
    }

    std::string coeff_str(const Coeff& x) const { return to_string(x); }
    std::string ideal_str(const Ideal& i) const { return i.to_string(); }

private:
    Int d_;
};

}  // namespace orush
