#pragma once

// One-variable power series known exactly strictly below a precision bound T.
// Coefficients at index >= T are unknown, never assumed zero: reading one
// throws PrecisionError. Arithmetic propagates precision as the min of the
// operand precisions; shifting by the variable raises it, truncation lowers
// it, and both are explicit.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orush/errors.hpp"
#include "orush/numeric.hpp"

namespace orush {

template <typename K>
class TruncSeries {
public:
    TruncSeries(std::string var, std::vector<K> coeffs)
        : var_(std::move(var)), c_(std::move(coeffs)) {
        if (c_.empty()) throw UsageError("series precision must be positive");
    }

    static TruncSeries constant(const std::string& var, const K& value, size_t prec) {
        if (prec == 0) throw UsageError("series precision must be positive");
        std::vector<K> c(prec, value - value);
        c[0] = value;
        return TruncSeries(var, std::move(c));
    }

    const std::string& var() const { return var_; }
    size_t precision() const { return c_.size(); }

    const K& coeff(size_t i) const {
        if (i >= c_.size())
            throw PrecisionError("coefficient index " + std::to_string(i) +
                                 " is beyond precision " + std::to_string(c_.size()));
        return c_[i];
    }

    // All shown coefficients zero; the series may still be nonzero past T.
    bool is_zero_at_precision() const {
        for (const auto& c : c_)
            if (!is_zero(c)) return false;
        return true;
    }

    // Index of the first nonzero shown coefficient.
    std::optional<size_t> order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return i;
        return std::nullopt;
    }

    friend TruncSeries operator+(const TruncSeries& u, const TruncSeries& v) {
        u.check(v);
        size_t n = std::min(u.c_.size(), v.c_.size());
        std::vector<K> c;
        c.reserve(n);
        for (size_t i = 0; i < n; ++i) c.push_back(u.c_[i] + v.c_[i]);
        return TruncSeries(u.var_, std::move(c));
    }
    friend TruncSeries operator-(const TruncSeries& u, const TruncSeries& v) {
        u.check(v);
        size_t n = std::min(u.c_.size(), v.c_.size());
        std::vector<K> c;
        c.reserve(n);
        for (size_t i = 0; i < n; ++i) c.push_back(u.c_[i] - v.c_[i]);
        return TruncSeries(u.var_, std::move(c));
    }
    TruncSeries operator-() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(-x);
        return TruncSeries(var_, std::move(c));
    }
    friend TruncSeries operator*(const TruncSeries& u, const TruncSeries& v) {
        u.check(v);
        size_t n = std::min(u.c_.size(), v.c_.size());
        std::vector<K> c;
        c.reserve(n);
        for (size_t k = 0; k < n; ++k) {
            size_t i = k < v.c_.size() ? 0 : k - (v.c_.size() - 1);
            K acc = u.c_[i] * v.c_[k - i];
            for (++i; i <= k && i < u.c_.size(); ++i) acc += u.c_[i] * v.c_[k - i];
            c.push_back(std::move(acc));
        }
        return TruncSeries(u.var_, std::move(c));
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    // Same variable, same precision, same shown coefficients.
    friend bool operator==(const TruncSeries& u, const TruncSeries& v) {
        return u.var_ == v.var_ && u.c_ == v.c_;
    }
    friend bool operator!=(const TruncSeries& u, const TruncSeries& v) { return !(u == v); }

    TruncSeries truncated(size_t prec) const {
        if (prec == 0 || prec > c_.size())
            throw PrecisionError("truncation target must be in [1, precision]");
        return TruncSeries(var_, std::vector<K>(c_.begin(), c_.begin() + prec));
    }

    // Multiply by var^k: coefficients known below T become known below T + k.
    TruncSeries shifted_up(size_t k) const {
        std::vector<K> c;
        c.reserve(c_.size() + k);
        K z = c_[0] - c_[0];
        for (size_t i = 0; i < k; ++i) c.push_back(z);
        for (const auto& x : c_) c.push_back(x);
        return TruncSeries(var_, std::move(c));
    }

    TruncSeries derivative() const {
        if (c_.size() == 1)
            throw PrecisionError("derivative of a precision-1 series has no shown coefficients");
        std::vector<K> c;
        c.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c.push_back(mul_si(c_[i], static_cast<long>(i)));
        return TruncSeries(var_, std::move(c));
    }

    TruncSeries mul_scalar(const K& a) const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(x * a);
        return TruncSeries(var_, std::move(c));
    }

private:
    void check(const TruncSeries& o) const {
        if (var_ != o.var_)
            throw UsageError("mixed series variables '" + var_ + "' and '" + o.var_ + "'");
    }
    std::string var_;
    std::vector<K> c_;
};

// Reciprocal modulo var^T; the constant term must be a unit of K.
template <typename K>
TruncSeries<K> series_invert(const TruncSeries<K>& u) {
    if (is_zero(u.coeff(0)))
        throw UsageError("series_invert: constant term is not a unit");
    K c0 = inv_of(u.coeff(0));
    std::vector<K> c;
    c.reserve(u.precision());
    c.push_back(c0);
    for (size_t k = 1; k < u.precision(); ++k) {
        K acc = u.coeff(1) * c[k - 1];
        for (size_t i = 2; i <= k; ++i) acc += u.coeff(i) * c[k - i];
        c.push_back(-(c0 * acc));
    }
    return TruncSeries<K>(u.var(), std::move(c));
}

template <typename K>
bool is_zero(const TruncSeries<K>& u) {
    return u.is_zero_at_precision();
}

template <typename K>
bool is_one(const TruncSeries<K>& u) {
    if (!is_one(u.coeff(0))) return false;
    for (size_t i = 1; i < u.precision(); ++i)
        if (!is_zero(u.coeff(i))) return false;
    return true;
}

template <typename K>
TruncSeries<K> mul_si(const TruncSeries<K>& u, long k) {
    std::vector<K> c;
    c.reserve(u.precision());
    for (size_t i = 0; i < u.precision(); ++i) c.push_back(mul_si(u.coeff(i), k));
    return TruncSeries<K>(u.var(), std::move(c));
}

template <typename K>
TruncSeries<K> inv_of(const TruncSeries<K>& u) {
    return series_invert(u);
}

template <typename K>
std::string to_string(const TruncSeries<K>& u) {
    std::string s;
    bool any = false;
    for (size_t i = 0; i < u.precision(); ++i) {
        if (is_zero(u.coeff(i))) continue;
        std::string cs = to_string(u.coeff(i));
        if (any) {
            if (!cs.empty() && cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += u.var();
            if (i > 1) s += "^" + std::to_string(i);
        }
        any = true;
    }
    if (!any) s = "0";
    s += " + O(" + u.var() + "^" + std::to_string(u.precision()) + ")";
    return s;
}

}  // namespace orush
