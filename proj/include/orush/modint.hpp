#pragma once

// Residue-class scalars. ModInt is Z/m for any m >= 2 (base ring of monomial
// quotient algebras); Fp additionally asserts the modulus prime at
// construction and is the coefficient field used by truncated series.

#include <string>
#include <vector>

#include "orush/errors.hpp"
#include "orush/numeric.hpp"

namespace orush {

namespace detail {
// Primality re-checks would dominate series arithmetic; remember verified moduli.
inline bool modulus_is_prime(const Int& p) {
    thread_local std::vector<Int> verified;
    for (const auto& q : verified)
        if (q == p) return true;
    if (!is_prime(p)) return false;
    if (verified.size() > 16) verified.clear();
    verified.push_back(p);
    return true;
}
}  // namespace detail

class ModInt {
public:
    ModInt(Int value, Int modulus) : m_(std::move(modulus)) {
        if (m_ < 2) throw UsageError("modulus must be >= 2");
        mpz_mod(r_.get_mpz_t(), value.get_mpz_t(), m_.get_mpz_t());
    }

    const Int& residue() const { return r_; }
    const Int& modulus() const { return m_; }

    friend ModInt operator+(const ModInt& a, const ModInt& b) {
        a.check(b);
        return ModInt(a.r_ + b.r_, a.m_);
    }
    friend ModInt operator-(const ModInt& a, const ModInt& b) {
        a.check(b);
        return ModInt(a.r_ - b.r_, a.m_);
    }
    friend ModInt operator*(const ModInt& a, const ModInt& b) {
        a.check(b);
        return ModInt(a.r_ * b.r_, a.m_);
    }
    ModInt operator-() const { return ModInt(-r_, m_); }

    friend bool operator==(const ModInt& a, const ModInt& b) {
        a.check(b);
        return a.r_ == b.r_;
    }
    friend bool operator!=(const ModInt& a, const ModInt& b) { return !(a == b); }

    ModInt& operator+=(const ModInt& o) { return *this = *this + o; }
    ModInt& operator-=(const ModInt& o) { return *this = *this - o; }
    ModInt& operator*=(const ModInt& o) { return *this = *this * o; }

protected:
    void check(const ModInt& o) const {
        if (m_ != o.m_) throw UsageError("mixed moduli " + m_.get_str() + " and " + o.m_.get_str());
    }
    Int r_;
    Int m_;
};

inline bool is_zero(const ModInt& a) { return is_zero(a.residue()); }
inline bool is_one(const ModInt& a) { return a.residue() == 1; }
inline ModInt mul_si(const ModInt& a, long k) { return ModInt(a.residue() * k, a.modulus()); }
inline std::string to_string(const ModInt& a) { return a.residue().get_str(); }

// Prime-field element; the modulus is verified prime (trial division) once.
class Fp : public ModInt {
public:
    Fp(Int value, Int modulus) : ModInt(std::move(value), std::move(modulus)) {
        if (!detail::modulus_is_prime(m_))
            throw UsageError("modulus " + m_.get_str() + " is not prime");
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.r_ + b.r_, a.m_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.r_ - b.r_, a.m_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.check(b);
        return Fp(a.r_ * b.r_, a.m_);
    }
    Fp operator-() const { return Fp(-r_, m_); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
};

inline Fp mul_si(const Fp& a, long k) { return Fp(a.residue() * k, a.modulus()); }

inline Fp inv_of(const Fp& a) {
    if (is_zero(a)) throw UsageError("inverse of zero in F_" + a.modulus().get_str());
    Int r;
    mpz_invert(r.get_mpz_t(), a.residue().get_mpz_t(), a.modulus().get_mpz_t());
    return Fp(r, a.modulus());
}

}  // namespace orush
