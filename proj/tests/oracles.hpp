#pragma once

// Independent oracles the test suite trusts instead of the library's own
// arithmetic. Everything here is deliberately naive: bounded brute force,
// closed-form factorial formulas, trial division. If an oracle and the
// library disagree, the oracle wins and the library is wrong.

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "orush/numeric.hpp"
#include "orush/quad.hpp"

namespace oracle {

using orush::Int;
using orush::Rat;

// ----- brute-force lattice closure for quadratic ideals
//
// The ideal generated by g_1..g_k in Z[w] is the Z-span of the vectors
// g_i and w*g_i in coordinates (u, v) for u + v*w. Walk the span inside a
// bounded box by repeatedly stepping +-(each generator vector) from every
// reached point, then read the Hermite triple (a, b, c) straight off the
// visited set: c is the least positive v, b the least u >= 0 at height c,
// a the least positive u at height 0.
struct HnfTriple {
    bool zero = true;
    long a = 0, b = 0, c = 0;
};

inline HnfTriple lattice_closure_hnf(long d, const std::vector<std::pair<long, long>>& gens,
                                     long box) {
    std::vector<std::pair<long, long>> steps;
    for (auto [u, v] : gens) {
        if (u == 0 && v == 0) continue;
        steps.emplace_back(u, v);
        steps.emplace_back(d * v, u);  // w*(u + v*w) = d*v + u*w
    }
    HnfTriple out;
    if (steps.empty()) return out;

    const long side = 2 * box + 1;
    std::vector<uint8_t> hit(static_cast<size_t>(side) * side, 0);
    auto idx = [&](long u, long v) {
        return static_cast<size_t>(u + box) * side + static_cast<size_t>(v + box);
    };
    std::deque<std::pair<long, long>> work;
    auto push = [&](long u, long v) {
        if (u < -box || u > box || v < -box || v > box) return;
        if (hit[idx(u, v)]) return;
        hit[idx(u, v)] = 1;
        work.emplace_back(u, v);
    };
    for (auto [u, v] : steps) push(u, v);
    while (!work.empty()) {
        auto [u, v] = work.front();
        work.pop_front();
        for (auto [su, sv] : steps) {
            push(u + su, v + sv);
            push(u - su, v - sv);
        }
    }

    long c = 0;
    for (long v = 1; v <= box && c == 0; ++v)
        for (long u = -box; u <= box; ++u)
            if (hit[idx(u, v)]) {
                c = v;
                break;
            }
    long a = 0;
    for (long u = 1; u <= box && a == 0; ++u)
        if (hit[idx(u, 0)]) a = u;
    if (a == 0 || c == 0) throw std::runtime_error("lattice oracle: box too small");
    long b = -1;
    for (long u = 0; u < a && b < 0; ++u)
        if (hit[idx(u, c)]) b = u;
    if (b < 0) throw std::runtime_error("lattice oracle: no basis vector at height c");
    // the walk must not have been clipped: demand generous slack
    if (4 * a > box || 4 * c > box)
        throw std::runtime_error("lattice oracle: result too close to the box edge");
    out.zero = false;
    out.a = a;
    out.b = b;
    out.c = c;
    return out;
}

// ----- binomial(1/2, k) by the factorial formula
inline Rat binomial_half(unsigned long k) {
    Rat num(1);
    for (unsigned long i = 0; i < k; ++i) num *= Rat(1, 2) - Rat(i);
    Rat den(1);
    for (unsigned long i = 2; i <= k; ++i) den *= Rat(i);
    Rat r = num / den;
    r.canonicalize();
    return r;
}

// ----- primes and primorials by trial division
inline bool trial_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

inline Int trial_primorial(long n) {
    Int out(1);
    for (long p = 2; p <= n; ++p)
        if (trial_prime(p)) out *= p;
    return out;
}

// ----- degree-2-in-x factorization search over F_p[y]
//
// A polynomial A(y)x^2 + B(y)x + C(y) splits into two x-degree-1 factors
// (a x + b)(cc x + dd) exactly when a*cc = A, b*dd = C, a*dd + b*cc = B.
// Enumerate every candidate pair (a, b) with deg a <= deg A, deg b <= deg C
// and divide out the cofactors. Coefficients are dense vectors over F_p,
// arithmetic mod p done by hand so the search shares nothing with the
// library.
namespace fppoly {

using P = std::vector<long>;  // little-endian coefficients, may hold trailing zeros

inline P trim(P f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}
inline long deg(const P& f) { return static_cast<long>(trim(f).size()) - 1; }

inline P mul(const P& f, const P& g, long p) {
    P t = trim(f), u = trim(g);
    if (t.empty() || u.empty()) return {};
    P out(t.size() + u.size() - 1, 0);
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < u.size(); ++j) out[i + j] = (out[i + j] + t[i] * u[j]) % p;
    return trim(out);
}

inline P add(const P& f, const P& g, long p) {
    P out(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        long v = 0;
        if (i < f.size()) v += f[i];
        if (i < g.size()) v += g[i];
        out[i] = v % p;
    }
    return trim(out);
}

inline bool eq(const P& f, const P& g) { return trim(f) == trim(g); }

// exact division f / g, empty optional when it does not divide
inline bool divide(const P& f, const P& g, long p, P& quot) {
    P num = trim(f), den = trim(g);
    if (den.empty()) return false;
    if (num.empty()) {
        quot = {};
        return true;
    }
    long inv = 0;
    for (long t = 1; t < p; ++t)
        if (den.back() * t % p == 1) inv = t;
    P q(num.size(), 0);
    while (!num.empty() && num.size() >= den.size()) {
        long shift = static_cast<long>(num.size() - den.size());
        long coef = num.back() * inv % p;
        q[shift] = coef;
        for (size_t i = 0; i < den.size(); ++i) {
            long& slot = num[shift + i];
            slot = ((slot - coef * den[i]) % p + p) % p;
        }
        num = trim(num);
        if (!num.empty() && static_cast<long>(num.size() - 1) >= shift + deg(den))
            return false;  // no progress; cannot happen over a field
    }
    if (!num.empty()) return false;
    quot = trim(q);
    return true;
}

// enumerate all polynomials of degree <= d
inline std::vector<P> all_polys(long d, long p) {
    std::vector<P> out{{}};
    for (long i = 0; i <= d; ++i) {
        std::vector<P> next;
        for (const P& f : out)
            for (long cv = 0; cv < p; ++cv) {
                P g = f;
                g.resize(static_cast<size_t>(i) + 1, 0);
                g[static_cast<size_t>(i)] = cv;
                next.push_back(g);
            }
        out = std::move(next);
    }
    return out;
}

// does A x^2 + B x + C factor into two x-degree-1 polynomials over F_p[y]?
inline bool splits_quadratic(const P& A, const P& B, const P& C, long p) {
    long da = deg(A), dc = deg(C);
    if (da < 0) throw std::runtime_error("splits_quadratic: leading coefficient is zero");
    for (const P& a : all_polys(da, p)) {
        if (trim(a).empty()) continue;
        P cc;
        if (!divide(A, a, p, cc)) continue;
        for (const P& b : all_polys(dc < 0 ? 0 : dc, p)) {
            // b*dd = C and a*dd + b*cc = B
            P dd;
            if (trim(b).empty()) {
                if (!trim(C).empty()) continue;
                // C = 0: need a*dd = B
                if (!divide(B, a, p, dd)) continue;
                return true;
            }
            if (!divide(C, b, p, dd)) continue;
            if (eq(add(mul(a, dd, p), mul(b, cc, p), p), B)) return true;
        }
    }
    return false;
}

}  // namespace fppoly

}  // namespace oracle
