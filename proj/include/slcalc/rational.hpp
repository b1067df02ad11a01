#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * Key design decisions:
 * - Integer backend is boost::multiprecision::cpp_int (arbitrary precision);
 *   series coefficients at high truncation orders overflow any fixed width.
 * - Always reduced to lowest terms, denominator always positive, zero is 0/1,
 *   so equality is plain field-wise comparison.
 * - No floating-point mode anywhere: exactness is the verification strategy.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace slcalc {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown on division by zero and other malformed arithmetic input.
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

class Rational {
    BigInt num_; // carries the sign
    BigInt den_; // always > 0

    void reduce() {
        if (den_ == 0)
            throw ArithmeticError("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw ArithmeticError("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational reciprocal() const {
        if (num_ == 0)
            throw ArithmeticError("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    /// Canonical textual form "p" or "p/q" (q > 1).
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    /// Parse "p" or "p/q"; throws ArithmeticError on malformed text.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(BigInt(text));
            return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
        } catch (const std::runtime_error&) {
            throw ArithmeticError("Rational: cannot parse '" + text + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational pow(const Rational& base, long long e) {
    if (e < 0)
        return pow(base.reciprocal(), -e);
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Rational factorial(long long n) {
    if (n < 0)
        throw ArithmeticError("factorial: negative argument");
    BigInt acc = 1;
    for (long long i = 2; i <= n; ++i)
        acc *= i;
    return Rational(acc);
}

/// Odd double factorial (n-1)!! style helper: n!! = n(n-2)(n-4)...
inline Rational double_factorial(long long n) {
    if (n < -1)
        throw ArithmeticError("double_factorial: argument < -1");
    BigInt acc = 1;
    for (long long i = n; i >= 2; i -= 2)
        acc *= i;
    return Rational(acc);
}

/// Falling factorial (Pochhammer in the falling convention):
/// k(k-1)...(k-l+1), with value 1 when l = 0.  Total on Rational.
inline Rational pochhammer(const Rational& k, long long l) {
    if (l < 0)
        throw ArithmeticError("pochhammer: negative length");
    Rational acc(1);
    for (long long i = 0; i < l; ++i)
        acc *= k - Rational(i);
    return acc;
}

} // namespace slcalc
