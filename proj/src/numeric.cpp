#include "orush/numeric.hpp"

#include <algorithm>

namespace orush {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse rational: \"" + s + "\"");
    }
}

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw UsageError("cannot parse integer: \"" + s + "\"");
    }
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (mpz_cmp_ui(n.get_mpz_t(), 4294967296UL) >= 0)
        throw BudgetError("primality by trial division limited to moduli < 2^32");
    unsigned long v = mpz_get_ui(n.get_mpz_t());
    if (v < 4) return v >= 2;
    if (v % 2 == 0 || v % 3 == 0) return false;
    for (unsigned long d = 5; d * d <= v; d += 6) {
        if (v % d == 0 || v % (d + 2) == 0) return false;
    }
    return true;
}

long valuation(Int n, const Int& p) {
    if (is_zero(n)) throw UsageError("valuation of zero is undefined");
    if (p < 2) throw UsageError("valuation base must be >= 2");
    long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<std::pair<Int, long>> factor_int(Int n, const Int& budget) {
    n = abs(n);
    if (n <= 1) throw UsageError("factor_int expects |n| >= 2");
    std::vector<std::pair<Int, long>> out;
    auto strip = [&](const Int& p) {
        long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(Int(2));
    strip(Int(3));
    for (Int d = 5; d <= budget && d * d <= n; d += 2) strip(d);
    if (n > 1) {
        if (n <= budget * budget) {
            out.emplace_back(n, 1);
        } else {
            throw BudgetError("cofactor " + n.get_str() + " exceeds trial-division budget " +
                              budget.get_str());
        }
    }
    return out;
}

Int radical_int(const Int& n, const Int& budget) {
    if (is_zero(n)) return Int(0);
    if (abs(n) == 1) return Int(1);
    Int r = 1;
    for (const auto& [p, e] : factor_int(n, budget)) r *= p;
    return r;
}

bool is_squarefree(const Int& n, const Int& budget) {
    if (is_zero(n)) return false;
    if (abs(n) == 1) return true;
    for (const auto& [p, e] : factor_int(n, budget))
        if (e > 1) return false;
    return true;
}

std::vector<long> sieve_primes(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

Int primorial(long bound) {
    Int r = 1;
    for (long p : sieve_primes(bound)) r *= p;
    return r;
}

}  // namespace orush
