#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series in z with RatFunc coefficients.
 *
 * Every value carries its truncation order N (length N+1) and binary
 * operations demand matching orders, failing loudly otherwise.  The Euler
 * operator E = z d/dz and multiplication by z are the only structure the
 * solution-operator recursions need.
 */

#include "errors.hpp"
#include "rational_function.hpp"

#include <vector>

namespace slcalc {

class FormalSeries {
    std::vector<RatFunc> c_; // c_[k] = coefficient of z^k; size = order+1

public:
    FormalSeries() : c_(1) {}
    explicit FormalSeries(int order) : c_(static_cast<size_t>(order) + 1) {
        if (order < 0)
            throw DomainError("FormalSeries: negative order");
    }
    explicit FormalSeries(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            throw DomainError("FormalSeries: empty coefficient list");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const RatFunc& coeff(int k) const {
        if (k < 0 || k > order())
            throw OrderMismatchError("FormalSeries: coefficient index beyond truncation order");
        return c_[static_cast<size_t>(k)];
    }
    RatFunc& coeff(int k) {
        if (k < 0 || k > order())
            throw OrderMismatchError("FormalSeries: coefficient index beyond truncation order");
        return c_[static_cast<size_t>(k)];
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero())
                return false;
        return true;
    }
    /// Smallest k with nonzero coefficient; -1 if identically zero.
    int first_nonzero() const {
        for (int k = 0; k <= order(); ++k)
            if (!c_[static_cast<size_t>(k)].is_zero())
                return k;
        return -1;
    }

    static void require_same_order(const FormalSeries& a, const FormalSeries& b) {
        if (a.order() != b.order())
            throw OrderMismatchError("FormalSeries: truncation orders differ (" +
                                     std::to_string(a.order()) + " vs " +
                                     std::to_string(b.order()) + ")");
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
        require_same_order(a, b);
        FormalSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k)
            r.coeff(k) = a.coeff(k) + b.coeff(k);
        return r;
    }
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
        require_same_order(a, b);
        FormalSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k)
            r.coeff(k) = a.coeff(k) - b.coeff(k);
        return r;
    }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        require_same_order(a, b);
        FormalSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j)
                r.coeff(i + j) += a.coeff(i) * b.coeff(j);
        return r;
    }

    FormalSeries scaled(const RatFunc& s) const {
        FormalSeries r = *this;
        for (auto& x : r.c_)
            x *= s;
        return r;
    }

    /// Euler operator E = z d/dz (coefficientwise multiplication by k).
    FormalSeries euler() const {
        FormalSeries r(order());
        for (int k = 0; k <= order(); ++k)
            r.coeff(k) = coeff(k) * RatFunc(k);
        return r;
    }

    /// d/dz; the result is exact to order N-1 and keeps that shorter order.
    FormalSeries derivative() const {
        if (order() == 0)
            return FormalSeries(0);
        FormalSeries r(order() - 1);
        for (int k = 0; k < order(); ++k)
            r.coeff(k) = coeff(k + 1) * RatFunc(k + 1);
        return r;
    }

    /// Multiplication by z at fixed truncation order (top coefficient of the
    /// input falls off the end of the window).
    FormalSeries shift_up() const {
        FormalSeries r(order());
        for (int k = order(); k >= 1; --k)
            r.coeff(k) = coeff(k - 1);
        r.coeff(0) = RatFunc(0);
        return r;
    }

    /// Restrict to a shorter truncation order.
    FormalSeries truncated(int new_order) const {
        if (new_order > order())
            throw OrderMismatchError("FormalSeries: cannot extend truncation order");
        FormalSeries r(new_order);
        for (int k = 0; k <= new_order; ++k)
            r.coeff(k) = coeff(k);
        return r;
    }

    /// Specialize every coefficient at a rational weight.
    FormalSeries eval_at(const Rational& h0, const std::string& context = "") const {
        FormalSeries r(order());
        for (int k = 0; k <= order(); ++k)
            r.coeff(k) = RatFunc(coeff(k).eval(h0, context + " z^" + std::to_string(k)));
        return r;
    }

    friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const FormalSeries& a, const FormalSeries& b) { return !(a == b); }
};

} // namespace slcalc
