#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orush/errors.hpp"
#include "orush/numeric.hpp"

namespace orush {

// Ideal of Z, stored by its nonnegative generator. (0) is the zero ideal,
// (1) the unit ideal.
class IdealZ {
public:
    IdealZ() : g_(0) {}
    explicit IdealZ(const Int& g) : g_(abs(g)) {}

    const Int& gen() const { return g_; }
    bool is_zero() const { return sgn(g_) == 0; }
    bool is_unit() const { return g_ == 1; }

    bool contains(const Int& x) const {
        if (is_zero()) return sgn(x) == 0;
        return mpz_divisible_p(x.get_mpz_t(), g_.get_mpz_t()) != 0;
    }
    bool contains(const IdealZ& other) const {
        if (is_zero()) return other.is_zero();
        return contains(other.g_);
    }

    friend IdealZ operator+(const IdealZ& a, const IdealZ& b) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.g_.get_mpz_t(), b.g_.get_mpz_t());
        return IdealZ(g);
    }
    friend IdealZ operator*(const IdealZ& a, const IdealZ& b) { return IdealZ(a.g_ * b.g_); }
    friend bool operator==(const IdealZ& a, const IdealZ& b) { return a.g_ == b.g_; }
    friend bool operator!=(const IdealZ& a, const IdealZ& b) { return !(a == b); }

    IdealZ intersect(const IdealZ& other) const {
        if (is_zero() || other.is_zero()) return IdealZ(0);
        Int l;
        mpz_lcm(l.get_mpz_t(), g_.get_mpz_t(), other.g_.get_mpz_t());
        return IdealZ(l);
    }

    IdealZ pow(unsigned long n) const {
        if (n == 0) return IdealZ(1);
        Int p;
        mpz_pow_ui(p.get_mpz_t(), g_.get_mpz_t(), n);
        return IdealZ(p);
    }

    // Radical: product of the distinct prime divisors. rad((0)) = (0).
    IdealZ radical(const Int& budget = Int(1000000)) const {
        if (is_zero()) return IdealZ(0);
        if (is_unit()) return IdealZ(1);
        return IdealZ(radical_int(g_, budget));
    }

    std::vector<std::pair<Int, long>> factor(const Int& budget = Int(1000000)) const {
        if (is_zero() || is_unit()) throw UsageError("factor: ideal must be proper and nonzero");
        return factor_int(g_, budget);
    }

    std::string to_string() const { return "(" + g_.get_str() + ")"; }

private:
    Int g_;
};

// Ideal of Z/mZ, stored by the divisor g of m that generates it (g = m
// gives the zero ideal, g = 1 the whole ring).
class IdealZm {
public:
    IdealZm(const Int& m, const Int& g) : m_(abs(m)) {
        if (m_ < 2) throw UsageError("IdealZm: modulus must be at least 2");
        Int d;
        mpz_gcd(d.get_mpz_t(), g.get_mpz_t(), m_.get_mpz_t());
        g_ = d;  // gcd(0, m) = m, the zero ideal
    }

    const Int& modulus() const { return m_; }
    const Int& gen() const { return g_; }
    bool is_zero() const { return g_ == m_; }
    bool is_unit() const { return g_ == 1; }

    bool contains(const Int& x) const {
        Int r = x % g_;
        return sgn(r) == 0;
    }
    bool contains(const IdealZm& other) const {
        check(other);
        return mpz_divisible_p(other.g_.get_mpz_t(), g_.get_mpz_t()) != 0;
    }

    friend IdealZm operator+(const IdealZm& a, const IdealZm& b) {
        a.check(b);
        Int g;
        mpz_gcd(g.get_mpz_t(), a.g_.get_mpz_t(), b.g_.get_mpz_t());
        return IdealZm(a.m_, g);
    }
    friend IdealZm operator*(const IdealZm& a, const IdealZm& b) {
        a.check(b);
        return IdealZm(a.m_, a.g_ * b.g_);
    }
    friend bool operator==(const IdealZm& a, const IdealZm& b) {
        a.check(b);
        return a.g_ == b.g_;
    }
    friend bool operator!=(const IdealZm& a, const IdealZm& b) { return !(a == b); }

    IdealZm intersect(const IdealZm& other) const {
        check(other);
        Int l;
        mpz_lcm(l.get_mpz_t(), g_.get_mpz_t(), other.g_.get_mpz_t());
        return IdealZm(m_, l);
    }

    IdealZm pow(unsigned long n) const {
        if (n == 0) return IdealZm(m_, 1);
        Int p;
        mpz_pow_ui(p.get_mpz_t(), g_.get_mpz_t(), n);
        return IdealZm(m_, p);
    }

    // Radical in Z/m: generated by the product of primes dividing g,
    // each prime taken once (then reduced against m by the constructor).
    IdealZm radical(const Int& budget = Int(1000000)) const {
        if (is_unit()) return IdealZm(m_, 1);
        return IdealZm(m_, radical_int(g_, budget));
    }

    std::string to_string() const { return "(" + g_.get_str() + ") in Z/" + m_.get_str(); }

private:
    void check(const IdealZm& other) const {
        if (m_ != other.m_) throw UsageError("IdealZm: mixed moduli");
    }

    Int m_;
    Int g_;
};

}  // namespace orush
