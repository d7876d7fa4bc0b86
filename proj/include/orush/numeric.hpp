#pragma once

// Exact scalar arithmetic. Integers and rationals are GMP classes; the
// helpers below add the desk-scale number theory the rest of the library
// needs (trial-division factoring, primality, valuations, primorials).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orush/errors.hpp"

namespace orush {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Int& a) { return a == 1; }
inline bool is_one(const Rat& a) { return a == 1; }

inline Int mul_si(const Int& a, long k) { return a * k; }
inline Rat mul_si(const Rat& a, long k) { return a * k; }

inline Rat inv_of(const Rat& a) {
    if (is_zero(a)) throw UsageError("division by zero rational");
    return 1 / a;
}

// num/den, canonicalized, den forced positive.
inline Rat make_rat(const Int& num, const Int& den) {
    if (is_zero(den)) throw UsageError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

// Parses "n" or "n/d".
Rat rat_from_string(const std::string& s);
Int int_from_string(const std::string& s);

// Trial division up to 2^32; enough for every modulus this project touches.
bool is_prime(const Int& n);

// v_p(n) for n != 0.
long valuation(Int n, const Int& p);

// Trial-division factorization of |n|, n != 0, nonunit. Primes <= budget are
// divided out; a remaining cofactor <= budget^2 is prime and kept, anything
// larger throws BudgetError.
std::vector<std::pair<Int, long>> factor_int(Int n, const Int& budget = Int(1000000));

// Product of the distinct prime divisors.
Int radical_int(const Int& n, const Int& budget = Int(1000000));

bool is_squarefree(const Int& n, const Int& budget = Int(1000000));

std::vector<long> sieve_primes(long bound);

Int primorial(long bound);

}  // namespace orush
