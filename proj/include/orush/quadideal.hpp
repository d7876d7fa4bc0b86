#pragma once

#include <string>
#include <vector>

#include "orush/errors.hpp"
#include "orush/numeric.hpp"
#include "orush/quad.hpp"

namespace orush {

// Ideal of Z[w], w = sqrt(d), as a 2x2 Hermite-form lattice
//   I = Z*a + Z*(b + c*w)   with a, c > 0, 0 <= b < a, c | a, c | b,
// or the distinguished zero ideal. The triple is the unique canonical
// form, so ideal equality is triple equality. norm(I) = a*c.
class QuadIdeal {
public:
    static QuadIdeal zero(const Int& d) { return QuadIdeal(d); }
    static QuadIdeal unit(const Int& d) { return QuadIdeal(d, 1, 0, 1); }

    QuadIdeal(const Int& d, const Int& a, const Int& b, const Int& c);

    const Int& d() const { return d_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    bool is_zero() const { return zero_; }
    bool is_unit() const { return !zero_ && a_ == 1 && c_ == 1; }

    Int norm() const { return zero_ ? Int(0) : Int(a_ * c_); }

    bool contains(const QuadElem& x) const;
    bool contains(const QuadIdeal& other) const;

    friend bool operator==(const QuadIdeal& i, const QuadIdeal& j) {
        i.check(j);
        if (i.zero_ || j.zero_) return i.zero_ == j.zero_;
        return i.a_ == j.a_ && i.b_ == j.b_ && i.c_ == j.c_;
    }
    friend bool operator!=(const QuadIdeal& i, const QuadIdeal& j) { return !(i == j); }
    // lexicographic on (a, b, c); zero ideal sorts first
    friend bool operator<(const QuadIdeal& i, const QuadIdeal& j);

    std::string to_string() const;

private:
    explicit QuadIdeal(const Int& d) : d_(d), a_(0), b_(0), c_(0), zero_(true) {
        detail::require_order_param(d_);
    }
    void check(const QuadIdeal& other) const {
        if (d_ != other.d_) throw UsageError("QuadIdeal: mixed order parameters");
    }

    Int d_, a_, b_, c_;
    bool zero_;
};

QuadIdeal hnf_from_generators(const Int& d, const std::vector<QuadElem>& gens);

QuadIdeal ideal_mul(const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal ideal_add(const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal ideal_intersect(const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal ideal_pow(const QuadIdeal& i, unsigned long n);

struct PrimeFactor {
    QuadIdeal prime;
    unsigned long exp;
};
using IdealFactorization = std::vector<PrimeFactor>;

// Splitting of a rational prime p in Z[sqrt(d)] (maximal order only).
struct PrimeSplitting {
    std::string type;               // "ramified", "split", or "inert"
    std::vector<QuadIdeal> primes;  // one ideal, except two when split
};
PrimeSplitting split_prime(const Int& d, const Int& p);

// Requires the maximal order (d not 1 mod 4); rejects zero and unit ideals.
IdealFactorization factor_ideal(const QuadIdeal& i, const Int& budget = Int(1000000));

QuadIdeal ideal_radical(const QuadIdeal& i, const Int& budget = Int(1000000));
bool is_reduced_quotient(const QuadIdeal& i, const Int& budget = Int(1000000));

}  // namespace orush
