#pragma once

// Elements a + b*w of the quadratic order Z[sqrt(d)], w^2 = d, with d
// squarefree and != 0, 1. d = -5 gives the maximal order of Q(sqrt(-5));
// d = -3 gives the index-2 non-maximal order inside Z[(1+sqrt(-3))/2].

#include <string>
#include <utility>
#include <vector>

#include "orush/errors.hpp"
#include "orush/numeric.hpp"

namespace orush {

namespace detail {
inline void require_order_param(const Int& d) {
    thread_local std::vector<Int> verified;
    for (const auto& q : verified)
        if (q == d) return;
    if (is_zero(d) || d == 1) throw UsageError("order parameter d must differ from 0 and 1");
    if (!is_squarefree(d)) throw UsageError("order parameter d = " + d.get_str() + " is not squarefree");
    if (verified.size() > 16) verified.clear();
    verified.push_back(d);
}
}  // namespace detail

class QuadElem {
public:
    QuadElem(Int a, Int b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        detail::require_order_param(d_);
    }

    static QuadElem integer(Int a, const Int& d) { return QuadElem(std::move(a), Int(0), d); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& d() const { return d_; }

    QuadElem conj() const { return QuadElem(a_, -b_, d_); }
    Int norm() const { return a_ * a_ - b_ * b_ * d_; }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        x.check(y);
        return QuadElem(x.a_ + y.a_, x.b_ + y.b_, x.d_);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        x.check(y);
        return QuadElem(x.a_ - y.a_, x.b_ - y.b_, x.d_);
    }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        x.check(y);
        return QuadElem(x.a_ * y.a_ + x.b_ * y.b_ * x.d_, x.a_ * y.b_ + x.b_ * y.a_, x.d_);
    }
    QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }

    // w * (a + b w) = b d + a w
    QuadElem times_w() const { return QuadElem(b_ * d_, a_, d_); }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        x.check(y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

    QuadElem& operator+=(const QuadElem& o) { return *this = *this + o; }
    QuadElem& operator-=(const QuadElem& o) { return *this = *this - o; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }

private:
    void check(const QuadElem& o) const {
        if (d_ != o.d_)
            throw UsageError("mixed quadratic orders d=" + d_.get_str() + " and d=" + o.d_.get_str());
    }
    Int a_, b_, d_;
};

inline bool is_zero(const QuadElem& x) { return is_zero(x.a()) && is_zero(x.b()); }
inline bool is_one(const QuadElem& x) { return x.a() == 1 && is_zero(x.b()); }
inline QuadElem mul_si(const QuadElem& x, long k) { return QuadElem(x.a() * k, x.b() * k, x.d()); }

inline std::string to_string(const QuadElem& x) {
    if (is_zero(x)) return "0";
    std::string s;
    if (!is_zero(x.a())) s = x.a().get_str();
    if (!is_zero(x.b())) {
        if (!s.empty() && sgn(x.b()) > 0) s += "+";
        if (x.b() == -1)
            s += "-";
        else if (x.b() != 1)
            s += x.b().get_str();
        s += "w";
    }
    return s;
}

}  // namespace orush
