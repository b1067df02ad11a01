#pragma once

/**
 * @file series_ops.hpp
 * @brief The concrete solution-operator series: K, G = K-bar, the F
 *        polynomial, the H series, their defining ODE residuals, and the
 *        structural spec of the composite log solution operators.
 *
 * Conventions (z = xy under the normal ordering :z^k: = x^k y^k):
 * - K(z):  k(k - h0 + 1) a_k + a_{k-1} = 0, a_0 = 1.  Solves the first-kind
 *   indicial branch (E(E - h0 + 1) + z) K = 0.
 * - G(z) = K with h0 -> 2 - h0:  k(k + h0 - 1) b_k + b_{k-1} = 0.  Second
 *   branch (E(E + h0 - 1) + z) G = 0.
 * - F(z): the degree h0-2 polynomial truncation of K at integer h0 >= 2
 *   (the partial sum available before the obstruction).
 * - H(z): g_0 = (h0+1)/h0^2,
 *   g_k = -(1/((k+1)(h0+k))) [ g_{k-1} + (-1)^{k+1}(h0+2k+1)/((k+1)!*(h0+k)_{k+1}) ]
 *   with (.)_l the falling factorial; z H solves the inhomogeneous ODE
 *   (E(E + h0 - 1) + z)[z H] = -(2E + h0 - 1)(G - 1).
 *
 * Generic-weight computation (RatFunc coefficients) is the default;
 * specialization happens by evaluation, so exceptional weights surface as
 * explicit PoleErrors naming the offending h0.
 */

#include "series.hpp"

#include <optional>

namespace slcalc {

/// A weight parameter: either the generic symbol h0 or a concrete rational.
struct WeightParam {
    std::optional<Rational> value; // nullopt = generic

    static WeightParam generic() { return {}; }
    static WeightParam at(Rational v) { return {std::move(v)}; }

    bool is_generic() const { return !value.has_value(); }
    RatFunc rf() const { return value ? RatFunc(*value) : RatFunc::h0(); }
    bool is_integer_at_least(long long m) const {
        return value && value->is_integer() && *value >= Rational(m);
    }
    long long as_small_int() const {
        if (!value || !value->is_integer())
            throw DomainError("WeightParam: integer h0 required");
        return static_cast<long long>(value->num());
    }
    std::string str() const { return value ? value->str() : std::string("generic"); }
};

/// K(z) to truncation order N.  At specialized h0 in {2,...,N+1} the
/// recursion divides by zero; that weight is reported as a PoleError.
inline FormalSeries k_series(const WeightParam& h0, int N) {
    FormalSeries s(N);
    RatFunc hh = h0.rf();
    s.coeff(0) = RatFunc(1);
    for (int k = 1; k <= N; ++k) {
        RatFunc divisor = RatFunc(k) * (RatFunc(k) - hh + RatFunc(1));
        if (divisor.is_zero())
            throw PoleError(*h0.value, "k_series coefficient k=" + std::to_string(k));
        s.coeff(k) = -s.coeff(k - 1) / divisor;
    }
    return s;
}

/// G(z) = K^{2-h0}(z) to order N; poles at h0 in {0,-1,-2,...}.
inline FormalSeries g_series(const WeightParam& h0, int N) {
    FormalSeries s(N);
    RatFunc hh = h0.rf();
    s.coeff(0) = RatFunc(1);
    for (int k = 1; k <= N; ++k) {
        RatFunc divisor = RatFunc(k) * (RatFunc(k) + hh - RatFunc(1));
        if (divisor.is_zero())
            throw PoleError(*h0.value, "g_series coefficient k=" + std::to_string(k));
        s.coeff(k) = -s.coeff(k - 1) / divisor;
    }
    return s;
}

/// F(z): the polynomial of degree h0-2 with top coefficient 1/((h0-2)!)^2,
/// defined for integer h0 >= 2 only.
inline FormalSeries f_polynomial(long long h0) {
    if (h0 < 2)
        throw DomainError("f_polynomial: integer h0 >= 2 required");
    int deg = static_cast<int>(h0 - 2);
    FormalSeries s(deg);
    s.coeff(0) = RatFunc(1);
    for (int k = 1; k <= deg; ++k) {
        // same recursion as K; divisor k(k - h0 + 1) is nonzero for k <= h0-2
        Rational divisor = Rational(k) * (Rational(k) - Rational(h0) + Rational(1));
        s.coeff(k) = s.coeff(k - 1).constant_value() * (-divisor.reciprocal());
    }
    return s;
}

/// H(z) coefficients g_0..g_N from the recurrence; generic h0 supported.
inline FormalSeries h_series(const WeightParam& h0, int N) {
    FormalSeries s(N);
    RatFunc hh = h0.rf();
    if (!h0.is_generic() && hh.is_zero())
        throw PoleError(*h0.value, "h_series gamma_0");
    s.coeff(0) = (hh + RatFunc(1)) / (hh * hh);
    RatFunc inhom_sign(1); // (-1)^{k+1} tracked incrementally
    for (int k = 1; k <= N; ++k) {
        RatFunc lead = RatFunc(k + 1) * (hh + RatFunc(k));
        RatFunc poch = pochhammer(hh + RatFunc(k), k + 1); // (h0+k)(h0+k-1)...(h0)
        if (lead.is_zero() || poch.is_zero())
            throw PoleError(*h0.value, "h_series gamma_" + std::to_string(k));
        RatFunc inhom = inhom_sign * (hh + RatFunc(2 * k + 1)) /
                        (RatFunc(factorial(k + 1)) * poch);
        s.coeff(k) = -(s.coeff(k - 1) + inhom) / lead;
        inhom_sign = -inhom_sign;
    }
    return s;
}

/// Closed form for the H coefficients, valid at integer h0 >= 1 only
/// (factorials of h0 appear; no Gamma extension is attempted):
/// g_k = (-1)^k (h0 * sum_{j=0}^{k-1} (h0+2j+3)/((j+2)(h0+j+1)) + h0 + 1)
///       * (h0-1)! / (h0 (h0+k)! (k+1)!).
inline Rational h_series_closed_form(long long h0, long long k) {
    if (h0 < 1)
        throw DomainError("h_series_closed_form: integer h0 >= 1 required");
    if (k < 0)
        throw DomainError("h_series_closed_form: k >= 0 required");
    Rational sum(0);
    for (long long j = 0; j < k; ++j)
        sum += Rational(h0 + 2 * j + 3) / (Rational(j + 2) * Rational(h0 + j + 1));
    Rational numer = Rational(h0) * sum + Rational(h0 + 1);
    Rational value = numer * factorial(h0 - 1) /
                     (Rational(h0) * factorial(h0 + k) * factorial(k + 1));
    return (k % 2 == 0) ? value : -value;
}

enum class OdeKind { First, Second };

/// Residual of the homogeneous indicial ODEs, same truncation order as the
/// input: First: k(k-h0+1)c_k + c_{k-1};  Second: k(k+h0-1)c_k + c_{k-1}.
inline FormalSeries ode_residual(const FormalSeries& s, OdeKind kind, const WeightParam& h0) {
    RatFunc hh = h0.rf();
    FormalSeries r(s.order());
    for (int k = 0; k <= s.order(); ++k) {
        RatFunc indicial = (kind == OdeKind::First) ? RatFunc(k) * (RatFunc(k) - hh + RatFunc(1))
                                                    : RatFunc(k) * (RatFunc(k) + hh - RatFunc(1));
        r.coeff(k) = indicial * s.coeff(k);
        if (k >= 1)
            r.coeff(k) += s.coeff(k - 1);
    }
    return r;
}

/// Residual of the inhomogeneous ODE satisfied by z H(z):
/// (E(E+h0-1)+z)[zH] + (2E+h0-1)(G-1), reported through z^{N+1} where N is
/// the truncation order of H.
inline FormalSeries inhom_residual(const FormalSeries& H, const WeightParam& h0) {
    int N = H.order();
    FormalSeries G = g_series(h0, N + 1);
    RatFunc hh = h0.rf();
    FormalSeries r(N + 1);
    for (int k = 1; k <= N + 1; ++k) {
        RatFunc lhs = RatFunc(k) * (RatFunc(k) + hh - RatFunc(1)) * H.coeff(k - 1);
        if (k >= 2)
            lhs += H.coeff(k - 2);
        RatFunc rhs = -(RatFunc(2 * k) + hh - RatFunc(1)) * G.coeff(k);
        r.coeff(k) = lhs - rhs;
    }
    return r;
}

enum class OpKind { First, Second, Log, LogDensity };

inline const char* op_kind_name(OpKind k) {
    switch (k) {
    case OpKind::First: return "first";
    case OpKind::Second: return "second";
    case OpKind::Log: return "log";
    case OpKind::LogDensity: return "logdensity";
    }
    return "?";
}

/**
 * Structural spec of a solution operator.
 *
 * Log kind, integer h0 >= 2 (with c1 = (h0-1)!(h0-2)! and m = h0-1):
 *   O = :F(z): - :z^{h0} H(z):/c1
 *       - [ x^m logx :G(z): y^m  -  x^m :G(z): (logtau y^m)_W ] / c1
 * and the log-coefficient law fbar0 = -y^m f0 / c1.
 *
 * Log kind, h0 = 1 (no F block, no constant; G is the J0 Bessel series):
 *   Obar = logx :G(z): - :G(z): logtau + :z H(z):
 *
 * First kind: just :K(z):.  Second kind: x^{h0-1} :G(z):.
 */
struct SolutionOperatorSpec {
    OpKind kind;
    WeightParam h0;
    int order = 0;                      // truncation order of the series blocks
    std::optional<FormalSeries> k;      // K series (First)
    std::optional<FormalSeries> f_poly; // F polynomial (Log, h0 >= 2)
    std::optional<FormalSeries> kbar;   // G = K^{2-h0} series (Second/Log)
    std::optional<FormalSeries> h_block; // H series (Log)
    std::optional<Rational> c1;         // (h0-1)!(h0-2)!  (Log, h0 >= 2)
    long long y_power = 0;              // m = h0-1 in the log blocks
    long long z_offset = 0;             // the :z^{h0}: offset on the H block
};

/// Assemble the canonical log solution operator at integer h0 >= 1 with all
/// series blocks truncated at order N.  LOGDENSITY is the same operator with
/// h0 set to d; callers flip the kind tag.
inline SolutionOperatorSpec assemble_log_operator(long long h0, int N) {
    if (h0 < 1)
        throw DomainError("assemble_log_operator: integer h0 >= 1 required");
    SolutionOperatorSpec spec;
    spec.kind = OpKind::Log;
    spec.h0 = WeightParam::at(Rational(h0));
    spec.order = N;
    spec.kbar = g_series(spec.h0, N);
    spec.h_block = h_series(spec.h0, N);
    spec.y_power = h0 - 1;
    if (h0 >= 2) {
        spec.f_poly = f_polynomial(h0);
        spec.c1 = factorial(h0 - 1) * factorial(h0 - 2);
        spec.z_offset = h0;
    } else {
        spec.z_offset = 1; // the :zH: block of Obar
    }
    return spec;
}

inline SolutionOperatorSpec make_first_kind_spec(const WeightParam& h0, int N) {
    SolutionOperatorSpec spec;
    spec.kind = OpKind::First;
    spec.h0 = h0;
    spec.order = N;
    spec.k = k_series(h0, N);
    return spec;
}

inline SolutionOperatorSpec make_second_kind_spec(const WeightParam& h0, int N) {
    SolutionOperatorSpec spec;
    spec.kind = OpKind::Second;
    spec.h0 = h0;
    spec.order = N;
    spec.kbar = g_series(h0, N);
    return spec;
}

} // namespace slcalc
