#pragma once

/**
 * @file rational_function.hpp
 * @brief Normalized rational functions in the formal weight symbol h0.
 *
 * Canonical representative: gcd(num, den) is a unit and den is monic, so
 * equality of values is syntactic equality of representatives.  Evaluation
 * at a rational h0 is defined away from poles; hitting a pole raises a
 * structured PoleError carrying the offending weight (exceptional weights
 * are meaningful events for the callers, not crashes).
 */

#include "weight_poly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace slcalc {

/// Evaluation at an exceptional (pole) weight.
struct PoleError : std::domain_error {
    Rational h0;      ///< the offending weight
    std::string what_; ///< context, e.g. which series coefficient degenerated
    PoleError(Rational h0_, const std::string& context)
        : std::domain_error("pole at h0 = " + h0_.str() + (context.empty() ? "" : " (" + context + ")")),
          h0(std::move(h0_)), what_(context) {}
};

class RatFunc {
    WeightPoly num_;
    WeightPoly den_; // monic, coprime to num_

    void normalize() {
        if (den_.is_zero())
            throw ArithmeticError("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = WeightPoly(1);
            return;
        }
        WeightPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Rational inv = lead.reciprocal();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rational& r) : num_(r), den_(1) {}
    RatFunc(long long n) : num_(Rational(n)), den_(1) {}
    RatFunc(WeightPoly n) : num_(std::move(n)), den_(1) {}
    RatFunc(WeightPoly n, WeightPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// The rational function h0 itself.
    static RatFunc h0() { return RatFunc(WeightPoly::variable()); }

    const WeightPoly& num() const { return num_; }
    const WeightPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant())
            throw ArithmeticError("RatFunc: not a constant");
        return num_.is_zero() ? Rational(0) : num_.constant_value();
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero())
            throw ArithmeticError("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc reciprocal() const {
        if (is_zero())
            throw ArithmeticError("RatFunc: reciprocal of zero");
        return RatFunc(den_, num_);
    }

    /// Exact evaluation; PoleError at zeros of the denominator.
    Rational eval(const Rational& h0, const std::string& context = "") const {
        Rational d = den_.eval(h0);
        if (d.is_zero())
            throw PoleError(h0, context);
        return num_.eval(h0) / d;
    }

    bool has_pole_at(const Rational& h0) const { return den_.eval(h0).is_zero(); }

    /// Textual form: a plain rational "p/q" for constants, otherwise
    /// "(poly)/(poly)" with integer coefficients, coprime content, and a
    /// positive-leading-coefficient denominator.
    std::string str() const {
        if (is_constant())
            return constant_value().str();
        // Clear rational coefficient denominators into an integer pair.
        BigInt L = 1;
        for (int i = 0; i <= num_.degree(); ++i)
            L = boost::multiprecision::lcm(L, num_.coeff(i).den());
        for (int i = 0; i <= den_.degree(); ++i)
            L = boost::multiprecision::lcm(L, den_.coeff(i).den());
        WeightPoly n = num_.scaled(Rational(L));
        WeightPoly d = den_.scaled(Rational(L));
        BigInt G = 0;
        for (int i = 0; i <= n.degree(); ++i)
            G = boost::multiprecision::gcd(G, n.coeff(i).num());
        for (int i = 0; i <= d.degree(); ++i)
            G = boost::multiprecision::gcd(G, d.coeff(i).num());
        if (G > 1) {
            Rational inv = Rational(1, G);
            n = n.scaled(inv);
            d = d.scaled(inv);
        }
        return "(" + n.str() + ")/(" + d.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }
};

/// Falling-factorial Pochhammer on rational functions:
/// k(k-1)...(k-l+1), value 1 when l = 0.
inline RatFunc pochhammer(const RatFunc& k, long long l) {
    if (l < 0)
        throw ArithmeticError("pochhammer: negative length");
    RatFunc acc(1);
    for (long long i = 0; i < l; ++i)
        acc *= k - RatFunc(i);
    return acc;
}

} // namespace slcalc
