#pragma once

// Sparse polynomials in at most two variables over a pluggable exact
// coefficient ring. Terms are stored in a map keyed by exponent pair; zero
// coefficients are never stored. The coefficient ring is any type providing
// +, -, *, unary -, ==, is_zero and mul_si; division helpers additionally
// need inv_of on the coefficient type.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orush/errors.hpp"
#include "orush/numeric.hpp"

namespace orush {

struct Exp {
    uint32_t x = 0;
    uint32_t y = 0;
    friend auto operator<=>(const Exp&, const Exp&) = default;
    uint32_t total() const { return x + y; }
    bool divides(const Exp& o) const { return x <= o.x && y <= o.y; }
    Exp operator+(const Exp& o) const { return Exp{x + o.x, y + o.y}; }
    // componentwise difference; caller guarantees divisibility
    Exp operator-(const Exp& o) const { return Exp{x - o.x, y - o.y}; }
};

template <typename R>
class Poly {
public:
    using Terms = std::map<Exp, R>;

    Poly() = default;

    explicit Poly(const R& constant) {
        if (!is_zero(constant)) t_.emplace(Exp{}, constant);
    }

    static Poly term(Exp e, const R& c) {
        Poly p;
        if (!is_zero(c)) p.t_.emplace(e, c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero_poly() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }

    void add_term(Exp e, const R& c) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (!is_zero(c)) t_.emplace(e, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) t_.erase(it);
        }
    }

    long degree_x() const {
        long d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, static_cast<long>(e.x));
        return d;
    }
    long degree_y() const {
        long d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, static_cast<long>(e.y));
        return d;
    }
    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, static_cast<long>(e.total()));
        return d;
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        Poly r = f;
        for (const auto& [e, c] : g.t_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        Poly r = f;
        for (const auto& [e, c] : g.t_) r.add_term(e, -c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        Poly r;
        for (const auto& [ef, cf] : f.t_)
            for (const auto& [eg, cg] : g.t_) r.add_term(ef + eg, cf * cg);
        return r;
    }

    Poly scaled(const R& a) const {
        Poly r;
        for (const auto& [e, c] : t_) {
            R p = c * a;
            if (!is_zero(p)) r.t_.emplace(e, p);
        }
        return r;
    }

    Poly pow(unsigned n) const {
        if (n == 0) throw UsageError("Poly::pow needs n >= 1 (no unit of the coefficient ring at hand)");
        Poly r = *this;
        for (unsigned i = 1; i < n; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const Poly& f, const Poly& g) { return f.t_ == g.t_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    // Coefficient of x^k, collected as a polynomial in y.
    Poly coeff_of_x(uint32_t k) const {
        Poly r;
        for (const auto& [e, c] : t_)
            if (e.x == k) r.t_.emplace(Exp{0, e.y}, c);
        return r;
    }

    std::vector<R> coefficients() const {
        std::vector<R> out;
        out.reserve(t_.size());
        for (const auto& [e, c] : t_) out.push_back(c);
        return out;
    }

private:
    Terms t_;
};

// Quotient and remainder by a divisor whose leading x-coefficient is an
// invertible constant in x (a unit of the coefficient ring). deg_x(rem) <
// deg_x(den). Used for the exact cofactor in the char-2 cube factorization.
template <typename R>
std::pair<Poly<R>, Poly<R>> poly_divmod_x(Poly<R> num, const Poly<R>& den) {
    long dd = den.degree_x();
    if (dd < 0) throw UsageError("division by zero polynomial");
    Poly<R> lead = den.coeff_of_x(static_cast<uint32_t>(dd));
    if (lead.term_count() != 1 || lead.terms().begin()->first.y != 0)
        throw UsageError("divisor leading x-coefficient must be a scalar");
    R lead_inv = inv_of(lead.terms().begin()->second);
    Poly<R> quot;
    while (!num.is_zero_poly() && num.degree_x() >= dd) {
        auto nx = static_cast<uint32_t>(num.degree_x());
        Poly<R> top = num.coeff_of_x(nx);
        // shift top down by x^dd and scale
        Poly<R> q;
        for (const auto& [e, c] : top.terms()) {
            R s = c * lead_inv;
            if (!is_zero(s)) q.add_term(Exp{nx - static_cast<uint32_t>(dd), e.y}, s);
        }
        if (q.is_zero_poly())
            throw UsageError("division stalled: leading coefficient vanished");
        quot = quot + q;
        num = num - q * den;
        if (!num.is_zero_poly() && num.degree_x() >= static_cast<long>(nx))
            throw UsageError("division not making progress");
    }
    return {quot, num};
}

template <typename R>
std::string poly_to_string(const Poly<R>& f, const std::string& xname = "x",
                           const std::string& yname = "y") {
    if (f.is_zero_poly()) return "0";
    std::string s;
    for (const auto& [e, c] : f.terms()) {
        std::string cs = to_string(c);
        if (!s.empty()) {
            if (!cs.empty() && cs[0] == '-') {
                s += " - ";
                cs = cs.substr(1);
            } else {
                s += " + ";
            }
        }
        std::string mono;
        if (e.x > 0) mono += xname + (e.x > 1 ? "^" + std::to_string(e.x) : "");
        if (e.y > 0) {
            if (!mono.empty()) mono += "*";
            mono += yname + (e.y > 1 ? "^" + std::to_string(e.y) : "");
        }
        bool coeff_needed = mono.empty() || !(cs == "1");
        bool wrapped = cs.find('+') != std::string::npos ||
                       cs.find('w') != std::string::npos ||
                       (cs.find('-') != std::string::npos && cs.find('-') != 0);
        if (coeff_needed) {
            s += wrapped ? "(" + cs + ")" : cs;
            if (!mono.empty()) s += "*";
        }
        s += mono;
    }
    return s;
}

}  // namespace orush
