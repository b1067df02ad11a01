#pragma once

/**
 * @file weight_poly.hpp
 * @brief Univariate polynomials in the formal weight symbol h0 over Rational.
 *
 * Coefficient index = degree.  Canonical form: trailing (highest-degree)
 * coefficient nonzero unless the polynomial is zero (empty coefficient list).
 * Division and gcd use rational coefficients throughout (field arithmetic),
 * so Euclid's algorithm is exact.
 */

#include "rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace slcalc {

class WeightPoly {
    std::vector<Rational> c_; // c_[i] = coefficient of h0^i

    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

public:
    WeightPoly() = default;
    WeightPoly(const Rational& constant) {
        if (!constant.is_zero())
            c_.push_back(constant);
    }
    WeightPoly(long long constant) : WeightPoly(Rational(constant)) {}
    explicit WeightPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// The polynomial h0 itself.
    static WeightPoly variable() { return WeightPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(int i) const {
        static const Rational zero(0);
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
    }
    const Rational& leading() const {
        if (c_.empty())
            throw ArithmeticError("WeightPoly: leading coefficient of zero polynomial");
        return c_.back();
    }
    Rational constant_value() const {
        if (!is_constant())
            throw ArithmeticError("WeightPoly: not a constant");
        return c_.empty() ? Rational(0) : c_[0];
    }

    friend WeightPoly operator+(const WeightPoly& a, const WeightPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i)
            r[i] += b.c_[i];
        return WeightPoly(std::move(r));
    }
    friend WeightPoly operator-(const WeightPoly& a, const WeightPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i)
            r[i] -= b.c_[i];
        return WeightPoly(std::move(r));
    }
    WeightPoly operator-() const {
        std::vector<Rational> r = c_;
        for (auto& x : r)
            x = -x;
        return WeightPoly(std::move(r));
    }
    friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
        if (a.is_zero() || b.is_zero())
            return WeightPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return WeightPoly(std::move(r));
    }
    WeightPoly& operator+=(const WeightPoly& b) { return *this = *this + b; }
    WeightPoly& operator-=(const WeightPoly& b) { return *this = *this - b; }
    WeightPoly& operator*=(const WeightPoly& b) { return *this = *this * b; }

    friend bool operator==(const WeightPoly& a, const WeightPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const WeightPoly& a, const WeightPoly& b) { return !(a == b); }

    /// Exact division with remainder: *this = q*div + r, deg r < deg div.
    std::pair<WeightPoly, WeightPoly> divmod(const WeightPoly& div) const {
        if (div.is_zero())
            throw ArithmeticError("WeightPoly: division by zero polynomial");
        WeightPoly q, r = *this;
        while (!r.is_zero() && r.degree() >= div.degree()) {
            int shift = r.degree() - div.degree();
            Rational factor = r.leading() / div.leading();
            std::vector<Rational> tc(shift + 1, Rational(0));
            tc[shift] = factor;
            WeightPoly t(std::move(tc));
            q += t;
            r -= t * div;
        }
        return {q, r};
    }

    WeightPoly scaled(const Rational& s) const {
        std::vector<Rational> r = c_;
        for (auto& x : r)
            x *= s;
        return WeightPoly(std::move(r));
    }

    /// Monic rescaling (unit leading coefficient); zero stays zero.
    WeightPoly monic() const {
        if (is_zero())
            return *this;
        return scaled(leading().reciprocal());
    }

    Rational eval(const Rational& h0) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * h0 + *it;
        return acc;
    }

    friend WeightPoly gcd(WeightPoly a, WeightPoly b) {
        while (!b.is_zero()) {
            WeightPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Textual form with the variable printed as "h0", terms in descending
    /// degree, e.g. "h0^2-4", "2*h0+1", "-1/3".
    std::string str() const {
        if (is_zero())
            return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& a = c_[i];
            if (a.is_zero())
                continue;
            Rational mag = abs(a);
            if (out.empty())
                out += a.is_negative() ? "-" : "";
            else
                out += a.is_negative() ? "-" : "+";
            bool unit_mag = mag.is_one();
            if (i == 0 || !unit_mag) {
                out += mag.str();
                if (i > 0)
                    out += "*";
            }
            if (i > 0) {
                out += "h0";
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const WeightPoly& p) {
        return os << p.str();
    }
};

} // namespace slcalc
