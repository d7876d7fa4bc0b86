#include "orush/quadideal.hpp"

#include <algorithm>
#include <utility>

#include "orush/smallmat.hpp"

namespace orush {

QuadIdeal::QuadIdeal(const Int& d, const Int& a, const Int& b, const Int& c)
    : d_(d), a_(a), b_(b), c_(c), zero_(false) {
    detail::require_order_param(d_);
    if (sgn(a_) <= 0 || sgn(c_) <= 0) throw UsageError("QuadIdeal: a and c must be positive");
    if (sgn(b_) < 0 || b_ >= a_) throw UsageError("QuadIdeal: b must satisfy 0 <= b < a");
    if (!mpz_divisible_p(a_.get_mpz_t(), c_.get_mpz_t()) ||
        !mpz_divisible_p(b_.get_mpz_t(), c_.get_mpz_t()))
        throw UsageError("QuadIdeal: c must divide a and b");
    // closure under w: w*(b+cw) = cd + bw lies in the lattice iff a*c | b^2 - c^2*d
    Int t = b_ * b_ - c_ * c_ * d_;
    Int ac = a_ * c_;
    if (!mpz_divisible_p(t.get_mpz_t(), ac.get_mpz_t()))
        throw UsageError("QuadIdeal: lattice not closed under multiplication by w");
}

bool QuadIdeal::contains(const QuadElem& x) const {
    if (x.d() != d_) throw UsageError("QuadIdeal: element from a different order");
    if (zero_) return orush::is_zero(x);
    // x = u + v*w lies in the lattice iff c | v and a | u - (v/c)*b
    if (!mpz_divisible_p(x.b().get_mpz_t(), c_.get_mpz_t())) return false;
    Int u = x.a() - Int(x.b() / c_) * b_;
    return mpz_divisible_p(u.get_mpz_t(), a_.get_mpz_t()) != 0;
}

bool QuadIdeal::contains(const QuadIdeal& other) const {
    check(other);
    if (other.zero_) return true;
    if (zero_) return false;
    return contains(QuadElem(other.a_, 0, d_)) && contains(QuadElem(other.b_, other.c_, d_));
}

bool operator<(const QuadIdeal& i, const QuadIdeal& j) {
    i.check(j);
    if (i.zero_ != j.zero_) return i.zero_;
    if (i.zero_) return false;
    if (i.a_ != j.a_) return i.a_ < j.a_;
    if (i.b_ != j.b_) return i.b_ < j.b_;
    return i.c_ < j.c_;
}

std::string QuadIdeal::to_string() const {
    if (zero_) return "(0)";
    std::string s = "(" + a_.get_str();
    if (!(b_ == 0 && c_ == a_))  // a rational principal ideal (n) prints as just (n)
        s += ", " + orush::to_string(QuadElem(b_, c_, d_));
    return s + ")";
}

namespace {

// Hermite reduction of integer rows (x, y), each meaning x + y*w.
// The row span must be closed under multiplication by w.
QuadIdeal hnf_from_rows(const Int& d, std::vector<std::pair<Int, Int>> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::pair<Int, Int>& r) {
                                  return sgn(r.first) == 0 && sgn(r.second) == 0;
                              }),
               rows.end());
    if (rows.empty()) return QuadIdeal::zero(d);

    // Euclid on the w-column until a single row carries it.
    Int b0 = 0, c0 = 0;
    while (true) {
        size_t piv = rows.size();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (sgn(rows[i].second) == 0) continue;
            if (piv == rows.size() ||
                mpz_cmpabs(rows[i].second.get_mpz_t(), rows[piv].second.get_mpz_t()) < 0)
                piv = i;
        }
        if (piv == rows.size()) break;  // w-column already clear
        if (sgn(rows[piv].second) < 0) {
            rows[piv].first = -rows[piv].first;
            rows[piv].second = -rows[piv].second;
        }
        bool clean = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == piv || sgn(rows[i].second) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i].second.get_mpz_t(), rows[piv].second.get_mpz_t());
            rows[i].first -= q * rows[piv].first;
            rows[i].second -= q * rows[piv].second;
            if (sgn(rows[i].second) != 0) clean = false;
        }
        if (clean) {
            b0 = rows[piv].first;
            c0 = rows[piv].second;
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
            break;
        }
    }

    Int a = 0;
    for (const auto& r : rows) mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), r.first.get_mpz_t());

    if (sgn(c0) == 0) {
        // pure-integer span: only the zero ideal is w-closed
        if (sgn(a) != 0) throw Error("hnf: lattice is not closed under multiplication by w");
        return QuadIdeal::zero(d);
    }
    if (sgn(a) == 0) throw Error("hnf: lattice is not closed under multiplication by w");
    Int b;
    mpz_fdiv_r(b.get_mpz_t(), b0.get_mpz_t(), a.get_mpz_t());
    return QuadIdeal(d, a, b, c0);
}

}  // namespace

QuadIdeal hnf_from_generators(const Int& d, const std::vector<QuadElem>& gens) {
    std::vector<std::pair<Int, Int>> rows;
    for (const auto& g : gens) {
        if (g.d() != d) throw UsageError("hnf_from_generators: mixed order parameters");
        rows.emplace_back(g.a(), g.b());
        QuadElem wg = g.times_w();
        rows.emplace_back(wg.a(), wg.b());
    }
    return hnf_from_rows(d, std::move(rows));
}

QuadIdeal ideal_mul(const QuadIdeal& i, const QuadIdeal& j) {
    if (i.d() != j.d()) throw UsageError("ideal_mul: mixed order parameters");
    if (i.is_zero() || j.is_zero()) return QuadIdeal::zero(i.d());
    QuadElem gi1(i.a(), 0, i.d()), gi2(i.b(), i.c(), i.d());
    QuadElem gj1(j.a(), 0, j.d()), gj2(j.b(), j.c(), j.d());
    return hnf_from_generators(i.d(), {gi1 * gj1, gi1 * gj2, gi2 * gj1, gi2 * gj2});
}

QuadIdeal ideal_add(const QuadIdeal& i, const QuadIdeal& j) {
    if (i.d() != j.d()) throw UsageError("ideal_add: mixed order parameters");
    if (i.is_zero()) return j;
    if (j.is_zero()) return i;
    return hnf_from_generators(
        i.d(), {QuadElem(i.a(), 0, i.d()), QuadElem(i.b(), i.c(), i.d()),
                QuadElem(j.a(), 0, j.d()), QuadElem(j.b(), j.c(), j.d())});
}

QuadIdeal ideal_intersect(const QuadIdeal& i, const QuadIdeal& j) {
    if (i.d() != j.d()) throw UsageError("ideal_intersect: mixed order parameters");
    if (i.is_zero() || j.is_zero()) return QuadIdeal::zero(i.d());
    // solve z1*B_i = z2*B_j: left kernel of the stacked 4x2 matrix [B_i; -B_j]
    ZMat m = {{i.a(), Int(0)}, {i.b(), i.c()}, {-j.a(), Int(0)}, {-j.b(), -j.c()}};
    ZMat ker = kernel_int(m);
    std::vector<std::pair<Int, Int>> rows;
    for (const auto& z : ker)
        rows.emplace_back(z[0] * i.a() + z[1] * i.b(), z[1] * i.c());
    return hnf_from_rows(i.d(), std::move(rows));
}

QuadIdeal ideal_pow(const QuadIdeal& i, unsigned long n) {
    if (n == 0) return QuadIdeal::unit(i.d());
    QuadIdeal acc = i;
    for (unsigned long k = 1; k < n; ++k) acc = ideal_mul(acc, i);
    return acc;
}

namespace {

// Smallest square root of d modulo an odd prime p not dividing d.
Int sqrt_mod(const Int& d, const Int& p) {
    Int dm;
    mpz_fdiv_r(dm.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
        Int e = (p + 1) / 4, r;
        mpz_powm(r.get_mpz_t(), dm.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((r * r) % p == dm) return std::min(r, Int(p - r));
    }
    // p = 1 mod 4: direct search, fine at trial-division scale
    for (Int t = 1; t < p; ++t)
        if ((t * t) % p == dm) return t;
    throw Error("sqrt_mod: no square root found");
}

}  // namespace

PrimeSplitting split_prime(const Int& d, const Int& p) {
    detail::require_order_param(d);
    if (!is_prime(p)) throw UsageError("split_prime: p must be prime");
    if (mpz_fdiv_ui(d.get_mpz_t(), 4) == 1)
        throw UsageError("unsupported-order: Z[sqrt(d)] with d = 1 mod 4 is not maximal");

    PrimeSplitting out;
    if (p == 2) {
        out.type = "ramified";
        if (mpz_even_p(d.get_mpz_t()))
            out.primes.push_back(hnf_from_generators(d, {QuadElem(2, 0, d), QuadElem(0, 1, d)}));
        else  // d = 3 mod 4
            out.primes.push_back(hnf_from_generators(d, {QuadElem(2, 0, d), QuadElem(1, 1, d)}));
        return out;
    }
    if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
        out.type = "ramified";
        out.primes.push_back(hnf_from_generators(d, {QuadElem(p, 0, d), QuadElem(0, 1, d)}));
        return out;
    }
    if (mpz_legendre(d.get_mpz_t(), p.get_mpz_t()) == 1) {
        out.type = "split";
        Int b = sqrt_mod(d, p);
        out.primes.push_back(hnf_from_generators(d, {QuadElem(p, 0, d), QuadElem(b, 1, d)}));
        out.primes.push_back(hnf_from_generators(d, {QuadElem(p, 0, d), QuadElem(p - b, 1, d)}));
        std::sort(out.primes.begin(), out.primes.end());
    } else {
        out.type = "inert";
        out.primes.push_back(hnf_from_generators(d, {QuadElem(p, 0, d)}));
    }
    return out;
}

IdealFactorization factor_ideal(const QuadIdeal& i, const Int& budget) {
    if (i.is_zero()) throw UsageError("factor_ideal: zero ideal has no factorization");
    if (i.is_unit()) throw UsageError("factor_ideal: unit ideal has no factorization");
    if (mpz_fdiv_ui(i.d().get_mpz_t(), 4) == 1)
        throw UsageError("unsupported-order: Z[sqrt(d)] with d = 1 mod 4 is not maximal");

    IdealFactorization out;
    for (const auto& [p, vp] : factor_int(i.norm(), budget)) {
        for (const auto& P : split_prime(i.d(), p).primes) {
            // exponent = largest e with I inside P^e
            unsigned long e = 0;
            QuadIdeal pk = P;
            while (pk.contains(i)) {
                ++e;
                if (e > static_cast<unsigned long>(vp))
                    throw Error("factor_ideal: exponent exceeds the valuation of the norm");
                pk = ideal_mul(pk, P);
            }
            if (e > 0) out.push_back({P, e});
        }
    }

    QuadIdeal check = QuadIdeal::unit(i.d());
    for (const auto& f : out) check = ideal_mul(check, ideal_pow(f.prime, f.exp));
    if (check != i)
        throw Error("factor_ideal: product of prime powers does not reconstruct the ideal");
    return out;
}

QuadIdeal ideal_radical(const QuadIdeal& i, const Int& budget) {
    if (i.is_zero()) return i;  // the order is a domain
    if (i.is_unit()) return i;
    QuadIdeal out = QuadIdeal::unit(i.d());
    for (const auto& f : factor_ideal(i, budget)) out = ideal_mul(out, f.prime);
    return out;
}

bool is_reduced_quotient(const QuadIdeal& i, const Int& budget) {
    return i == ideal_radical(i, budget);
}

}  // namespace orush
