#pragma once

/**
 * @file halfspace.hpp
 * @brief Concrete realization of the boundary calculus on the hyperbolic
 *        half-space model (flat boundary, sigma <-> r, I^2 = 1).
 *
 * Operators (analyst's Delta = d_r^2 + sum_i eps_i d_{x_i}^2):
 *     I.D f = -r Delta f + (d + 2w - 2) d_r f       (weight w -> w - 1)
 *     x f   = r f                                    (weight w -> w + 1)
 *     y f   = -I.D f
 *
 * Log-density representatives (weight tag 1 in the bundle language) are
 * carried as weight-0 fields: on flat data the log-mode rule
 * I.D U = -r Delta U + (d-2) d_r U coincides with the w = 0 density rule and
 * outputs an honest weight -1 density, which is exactly what makes the
 * holographic Q chain agree with the tangential-operator chain.
 *
 * Q-curvature convention: the argument of q_holographic is the log of the
 * boundary scale (log mu-tilde).  The metric e^{2 omega} delta corresponds to
 * scale log mu-hat = -omega, so the 2-d Gauss-curvature oracle reads
 * q_holographic(-omega) = -Delta omega (verified in the test suite).
 */

#include "diff_op.hpp"
#include "series_ops.hpp"

#include <optional>
#include <random>
#include <vector>

namespace slcalc {

/// First-kind expansion hit an exceptional weight: continuation past order
/// level is obstructed; consult obstruction().
struct ExceptionalWeightError : DomainError {
    Rational h0;
    long long level; ///< the order l = h0 - 2 where continuation fails
    ExceptionalWeightError(Rational h0_, long long level_)
        : DomainError("exceptional weight h0 = " + h0_.str() + ": first-kind expansion is " +
                      "obstructed at order " + std::to_string(level_) +
                      "; use the obstruction/log solvers"),
          h0(std::move(h0_)), level(level_) {}
};

inline DensityField idotd_apply(const DensityField& f, int d) {
    if (d != f.n() + 1)
        throw DomainError("idotd_apply: d must equal n+1");
    Rational coeff = Rational(d) + Rational(2) * f.weight() - Rational(2);
    DensityField lap = f.laplacian().times_r_pow(Rational(1), Rational(0)).scaled(Rational(-1));
    DensityField out = lap + f.d_r().scaled(coeff);
    out.set_weight(f.weight() - Rational(1));
    return out;
}

inline DensityField y_apply(const DensityField& f, int d) {
    return idotd_apply(f, d).scaled(Rational(-1));
}

/// y^k as a field map.
inline DensityField y_pow_apply(long long k, DensityField f, int d) {
    for (long long i = 0; i < k; ++i)
        f = y_apply(f, d);
    return f;
}

/// I.D at a fixed weight as an explicit operator (no weight bookkeeping).
inline LinDiffOp idotd_op(const Rational& w, int d, int n, const std::vector<int>& sig) {
    LinDiffOp op(n);
    Rational c = Rational(d) + Rational(2) * w - Rational(2);
    // -r d_r^2
    op.add_term(2, std::vector<int>(static_cast<size_t>(n), 0), RPoly{Rational(0), Rational(-1)});
    // -r eps_i d_{x_i}^2
    for (int i = 0; i < n; ++i) {
        std::vector<int> dx(static_cast<size_t>(n), 0);
        dx[static_cast<size_t>(i)] = 2;
        op.add_term(0, std::move(dx),
                    RPoly{Rational(0), Rational(-sig[static_cast<size_t>(i)])});
    }
    // (d + 2w - 2) d_r
    if (!c.is_zero())
        op.add_term(1, std::vector<int>(static_cast<size_t>(n), 0), RPoly{c});
    return op;
}

/// P_k = y^k on weight (k-n)/2, composed into one explicit operator.
inline LinDiffOp p_k_build(long long k, int d, std::vector<int> sig = {}) {
    if (k < 1)
        throw DomainError("p_k_build: k >= 1 required");
    int n = d - 1;
    if (sig.empty())
        sig.assign(static_cast<size_t>(n), 1);
    Rational w0 = Rational(k - n, 2);
    LinDiffOp p = LinDiffOp::identity(n);
    for (long long i = 0; i < k; ++i) {
        // i-th application acts at weight w0 - i
        LinDiffOp yi = idotd_op(w0 - Rational(i), d, n, sig).scaled(Rational(-1));
        p = compose(yi, p);
    }
    return p;
}

// ---------------------------------------------------------------------------
// GJMS constant and Q-curvature
// ---------------------------------------------------------------------------

struct GjmsReport {
    long long k = 0;
    int d = 0;
    bool consistent = true;      ///< a single constant fits every probe
    bool zero_restriction = false; ///< odd-k case: boundary restriction is 0
    Rational c;                  ///< measured signed constant, P_k| = c Delta^{k/2}|
    std::string witness;         ///< first inconsistency, when any
};

namespace detail {
/// All monomials in n variables of total degree exactly deg.
inline void monomials_of_degree(int n, int deg, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        int used = 0;
        for (int e : cur)
            used += e;
        cur.push_back(deg - used);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    int used = 0;
    for (int e : cur)
        used += e;
    for (int e = 0; e <= deg - used; ++e) {
        cur.push_back(e);
        monomials_of_degree(n, deg, cur, out);
        cur.pop_back();
    }
}
inline std::vector<std::vector<int>> monomials_of_degree(int n, int deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    monomials_of_degree(n, deg, cur, out);
    return out;
}
} // namespace detail

/// Measure c with P_k f|_{r=0} = c (Delta_Sigma)^{k/2} f on the monomials of
/// degree k and k-1 (the latter must map to zero on both sides); for odd k
/// certify the identically-zero restriction instead.
inline GjmsReport gjms_constant(long long k, int d, std::vector<int> sig = {}) {
    GjmsReport rep;
    rep.k = k;
    rep.d = d;
    int n = d - 1;
    if (sig.empty())
        sig.assign(static_cast<size_t>(n), 1);
    Rational w0 = Rational(k - n, 2);
    bool have_c = false;
    for (int deg : {static_cast<int>(k), static_cast<int>(k) - 1}) {
        if (deg < 0)
            continue;
        for (const auto& mono : detail::monomials_of_degree(n, deg)) {
            DensityField f(w0, n, sig);
            f.add_term(0, 0, mono, Rational(1));
            BoundaryField pk = y_pow_apply(k, f, d).restrict_boundary();
            if (k % 2 == 1) {
                if (!pk.is_zero()) {
                    rep.consistent = false;
                    rep.witness = "nonzero odd-order restriction on " + detail::monomial_str(mono);
                    return rep;
                }
                continue;
            }
            BoundaryField lap = f.restrict_boundary();
            for (long long q = 0; q < k / 2; ++q)
                lap = lap.laplacian(sig);
            lap.set_weight(pk.weight()); // compare shapes, not weight tags
            if (lap.is_zero()) {
                if (!pk.is_zero()) {
                    rep.consistent = false;
                    rep.witness = "P_k nonzero on Delta^{k/2}-harmonic " + detail::monomial_str(mono);
                    return rep;
                }
                continue;
            }
            Rational c;
            if (!proportional(lap, pk, c) || (have_c && c != rep.c)) {
                rep.consistent = false;
                rep.witness = "inconsistent constant on " + detail::monomial_str(mono);
                return rep;
            }
            if (!have_c) {
                rep.c = c;
                have_c = true;
            }
        }
    }
    rep.zero_restriction = (k % 2 == 1);
    return rep;
}

/// Holographic Q-curvature: apply y n times to an extension of log mu-tilde
/// (a weight-0 field; the first application is the flat log-density rule,
/// which at weight 0 coincides with the density rule) and restrict.
/// Extension independence is self-checked against the r-independent extension.
inline BoundaryField q_holographic(const DensityField& omega, int n, bool allow_odd = false) {
    if (n % 2 == 1 && !allow_odd)
        throw DomainError("q_holographic: n must be even (generalized odd-n value available "
                          "behind allow_odd)");
    if (omega.n() != n)
        throw DomainError("q_holographic: field dimension != n");
    if (!(omega.weight() == Rational(0)))
        throw WeightMismatchError("q_holographic: log-scale representative must carry weight 0");
    int d = n + 1;
    Rational norm = double_factorial(n - 1);
    norm = (norm * norm).reciprocal();
    BoundaryField q = y_pow_apply(n, omega, d).restrict_boundary().scaled(norm);
    DensityField flat = DensityField::extend_r_independent(omega.restrict_boundary(), Rational(0),
                                                           n, omega.signature());
    BoundaryField q2 = y_pow_apply(n, flat, d).restrict_boundary().scaled(norm);
    if (!(q == q2))
        throw InternalError("q_holographic: extension dependence detected");
    return q;
}

/// Tangential obstruction P_{h0-1} f0|_Sigma of the first-kind expansion at
/// integer h0 = d + 2 w0 >= 2.
inline BoundaryField obstruction(const DensityField& f0, int d) {
    Rational h0 = Rational(d) + Rational(2) * f0.weight();
    if (!h0.is_integer() || h0 < Rational(2))
        throw DomainError("obstruction: integer h0 >= 2 required (h0 = " + h0.str() + ")");
    long long m = static_cast<long long>(h0.num()) - 1;
    return y_pow_apply(m, f0, d).restrict_boundary();
}

// ---------------------------------------------------------------------------
// Boundary-expansion solvers
// ---------------------------------------------------------------------------

struct SolutionTerm {
    Rational sigma_power;
    bool log = false;
    DensityField field;
};

struct ExpansionSolution {
    OpKind kind = OpKind::First;
    Rational w0;
    int d = 0;
    int N = 0;
    std::vector<SolutionTerm> terms;
    DensityField logtau;    ///< weight-0 representative of log tau (0 = flat scale)
    DensityField assembled; ///< sum of r^p (log r)^{0/1} * field, weight w0
    bool exact = false;
    std::optional<Rational> residual_order;
    DensityField residual;

    bool has_log_part() const {
        for (const auto& t : terms)
            if (t.log && !t.field.is_zero())
                return true;
        return false;
    }
};

namespace detail {
inline void finalize_solution(ExpansionSolution& sol) {
    // prune vanished coefficient fields; the term list is reported verbatim
    std::erase_if(sol.terms, [](const SolutionTerm& t) { return t.field.is_zero(); });
    DensityField acc(sol.w0, sol.logtau.n(), sol.logtau.signature());
    bool first = true;
    for (const auto& t : sol.terms) {
        if (t.field.is_zero())
            continue;
        DensityField piece = t.field.times_r_pow(t.sigma_power, t.sigma_power);
        if (t.log)
            piece = piece.times_logr();
        acc = first ? piece : acc + piece;
        first = false;
    }
    if (first)
        acc = DensityField(sol.w0, sol.logtau.n(), sol.logtau.signature());
    sol.assembled = acc;
    sol.residual = idotd_apply(sol.assembled, sol.d);
    sol.exact = sol.residual.is_zero();
    if (!sol.exact)
        sol.residual_order = sol.residual.min_r_order();
}
} // namespace detail

/// First-kind expansion f0 -> sum_m r^m (I.D)^m f0 / (m! (m+1-h0)_m).
/// Exceptional integer weights h0 in {2,...,N+1} abort with a structured
/// error pointing at the obstruction.
inline ExpansionSolution solve_first_kind(const DensityField& f0, int d, int N) {
    if (d != f0.n() + 1)
        throw DomainError("solve_first_kind: d must equal n+1");
    ExpansionSolution sol;
    sol.kind = OpKind::First;
    sol.w0 = f0.weight();
    sol.d = d;
    sol.N = N;
    sol.logtau = DensityField(Rational(0), f0.n(), f0.signature());
    Rational h0 = Rational(d) + Rational(2) * sol.w0;
    DensityField idm = f0; // (I.D)^m f0
    for (int m = 0; m <= N; ++m) {
        if (m > 0) {
            idm = idotd_apply(idm, d);
            if (idm.is_zero())
                break; // the expansion terminates: exact solution
            Rational poch = pochhammer(Rational(m + 1) - h0, m);
            if (poch.is_zero())
                throw ExceptionalWeightError(h0, m - 1);
            sol.terms.push_back(
                {Rational(m), false, idm.scaled((factorial(m) * poch).reciprocal())});
        } else {
            sol.terms.push_back({Rational(0), false, f0});
        }
    }
    detail::finalize_solution(sol);
    return sol;
}

/// Second-kind expansion fbar0 -> r^{h0-1} sum_k beta_k r^k y^k fbar0, where
/// fbar0 carries weight w0 - h0 + 1 and beta is the G-series recursion.
inline ExpansionSolution solve_second_kind(const DensityField& fbar0, int d, int N) {
    if (d != fbar0.n() + 1)
        throw DomainError("solve_second_kind: d must equal n+1");
    Rational wbar = fbar0.weight();
    Rational w0 = Rational(1 - d) - wbar;
    Rational h0 = Rational(d) + Rational(2) * w0;
    if (h0.is_integer() && h0 <= Rational(0))
        throw PoleError(h0, "solve_second_kind: h0 must avoid nonpositive integers");
    ExpansionSolution sol;
    sol.kind = OpKind::Second;
    sol.w0 = w0;
    sol.d = d;
    sol.N = N;
    sol.logtau = DensityField(Rational(0), fbar0.n(), fbar0.signature());
    FormalSeries beta = g_series(WeightParam::at(h0), N);
    DensityField yk = fbar0;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            yk = y_apply(yk, d);
            if (yk.is_zero())
                break;
        }
        sol.terms.push_back(
            {h0 - Rational(1) + Rational(k), false, yk.scaled(beta.coeff(k).constant_value())});
    }
    detail::finalize_solution(sol);
    return sol;
}

/// Canonical log-kind solution at integer h0 >= 2 (the solution operator O
/// realized on fields; logtau is a weight-0 representative, default 0).
inline ExpansionSolution solve_log_kind(const DensityField& f0, int d, int N,
                                        std::optional<DensityField> logtau = std::nullopt) {
    if (d != f0.n() + 1)
        throw DomainError("solve_log_kind: d must equal n+1");
    Rational h0r = Rational(d) + Rational(2) * f0.weight();
    if (!h0r.is_integer() || h0r < Rational(2))
        throw DomainError("solve_log_kind: integer h0 >= 2 required (h0 = " + h0r.str() + ")");
    long long h0 = static_cast<long long>(h0r.num());
    DensityField T = logtau ? *logtau : DensityField(Rational(0), f0.n(), f0.signature());
    if (!(T.weight() == Rational(0)))
        throw WeightMismatchError("solve_log_kind: logtau representative must carry weight 0");
    ExpansionSolution sol;
    sol.kind = OpKind::Log;
    sol.w0 = f0.weight();
    sol.d = d;
    sol.N = N;
    sol.logtau = T;
    Rational c1 = factorial(h0 - 1) * factorial(h0 - 2);
    FormalSeries F = f_polynomial(h0);
    FormalSeries gamma = h_series(WeightParam::at(Rational(h0)), N);
    FormalSeries beta = g_series(WeightParam::at(Rational(h0)), N + 1);

    // y^k f0 chain through order h0 + N
    std::vector<DensityField> ykf0{f0};
    for (long long k = 1; k <= h0 + N && !ykf0.back().is_zero(); ++k)
        ykf0.push_back(y_apply(ykf0.back(), d));
    auto yk_f0 = [&](long long k) -> DensityField {
        if (k < static_cast<long long>(ykf0.size()))
            return ykf0[static_cast<size_t>(k)];
        return DensityField(f0.weight() - Rational(k), f0.n(), f0.signature());
    };

    // F block: sum_{k<=h0-2} F_k r^k y^k f0
    for (long long k = 0; k <= h0 - 2; ++k)
        sol.terms.push_back(
            {Rational(k), false, yk_f0(k).scaled(F.coeff(static_cast<int>(k)).constant_value())});
    // H block: -sum_j gamma_j r^{h0+j} y^{h0+j} f0 / c1
    for (int j = 0; j <= N; ++j)
        sol.terms.push_back({Rational(h0 + j), false,
                             yk_f0(h0 + j).scaled(-gamma.coeff(j).constant_value() / c1)});
    // log block: r^{h0-1} log r * sum_k beta_k r^k y^k fbar0
    DensityField fbar0 = yk_f0(h0 - 1).scaled(-c1.reciprocal());
    DensityField ykbar = fbar0;
    for (int k = 0; k <= N + 1; ++k) {
        if (k > 0) {
            if (ykbar.is_zero())
                break;
            ykbar = y_apply(ykbar, d);
        }
        sol.terms.push_back({Rational(h0 - 1) + Rational(k), true,
                             ykbar.scaled(beta.coeff(k).constant_value())});
    }
    // Weyl block: + r^{h0-1} sum_k beta_k r^k y^k [ (T y^m f0 + y^m (T f0))/2 ] / c1
    if (!T.is_zero()) {
        DensityField w0field =
            (T * yk_f0(h0 - 1) + y_pow_apply(h0 - 1, T * f0, d)).scaled(Rational(1, 2) / c1);
        DensityField ykw = w0field;
        for (int k = 0; k <= N + 1; ++k) {
            if (k > 0) {
                if (ykw.is_zero())
                    break;
                ykw = y_apply(ykw, d);
            }
            sol.terms.push_back({Rational(h0 - 1) + Rational(k), false,
                                 ykw.scaled(beta.coeff(k).constant_value())});
        }
    }
    detail::finalize_solution(sol);
    return sol;
}

/// The h0 = 1 variant: data is fbar0 (weight (1-d)/2) and the operator is
/// Obar = logx :J0: - :J0: logtau + :zH:.
inline ExpansionSolution solve_log_kind_h1(const DensityField& fbar0, int d, int N,
                                           std::optional<DensityField> logtau = std::nullopt) {
    if (d != fbar0.n() + 1)
        throw DomainError("solve_log_kind_h1: d must equal n+1");
    Rational w0 = Rational(1 - d, 2);
    if (!(fbar0.weight() == w0))
        throw WeightMismatchError("solve_log_kind_h1: data must carry weight (1-d)/2");
    DensityField T = logtau ? *logtau : DensityField(Rational(0), fbar0.n(), fbar0.signature());
    if (!(T.weight() == Rational(0)))
        throw WeightMismatchError("solve_log_kind_h1: logtau representative must carry weight 0");
    ExpansionSolution sol;
    sol.kind = OpKind::Log;
    sol.w0 = w0;
    sol.d = d;
    sol.N = N;
    sol.logtau = T;
    FormalSeries beta = g_series(WeightParam::at(Rational(1)), N + 1); // J0 coefficients
    FormalSeries gamma = h_series(WeightParam::at(Rational(1)), N);
    DensityField ykbar = fbar0;
    for (int k = 0; k <= N + 1; ++k) {
        if (k > 0) {
            if (ykbar.is_zero())
                break;
            ykbar = y_apply(ykbar, d);
        }
        sol.terms.push_back({Rational(k), true, ykbar.scaled(beta.coeff(k).constant_value())});
    }
    if (!T.is_zero()) {
        DensityField tk = T * fbar0;
        for (int k = 0; k <= N + 1; ++k) {
            if (k > 0) {
                if (tk.is_zero())
                    break;
                tk = y_apply(tk, d);
            }
            sol.terms.push_back({Rational(k), false, tk.scaled(-beta.coeff(k).constant_value())});
        }
    }
    DensityField ybar = y_apply(fbar0, d);
    for (int j = 0; j <= N; ++j) {
        if (j > 0) {
            if (ybar.is_zero())
                break;
            ybar = y_apply(ybar, d);
        }
        if (!ybar.is_zero())
            sol.terms.push_back({Rational(1 + j), false, ybar.scaled(gamma.coeff(j).constant_value())});
    }
    detail::finalize_solution(sol);
    return sol;
}

/// Log-density problem: U0 is the weight-0 representative of a log density;
/// the solution is the log-kind machinery at h0 = d.
inline ExpansionSolution solve_log_density(const DensityField& U0, int d, int N,
                                           std::optional<DensityField> logtau = std::nullopt) {
    if (!(U0.weight() == Rational(0)))
        throw WeightMismatchError("solve_log_density: log-density representative must carry "
                                  "weight 0");
    ExpansionSolution sol = solve_log_kind(U0, d, N, std::move(logtau));
    sol.kind = OpKind::LogDensity;
    return sol;
}

/// Expansion with a requested leading exponent alpha: only alpha = 0
/// (first kind, data of weight w0) and alpha = h0 - 1 (second kind, data of
/// weight w0 - h0 + 1) admit solutions.
inline ExpansionSolution solve_with_exponent(const DensityField& data, int d, int N,
                                             const Rational& alpha, const Rational& w0) {
    Rational h0 = Rational(d) + Rational(2) * w0;
    if (alpha.is_zero())
        return solve_first_kind(data, d, N);
    if (alpha == h0 - Rational(1))
        return solve_second_kind(data, d, N);
    throw DomainError("no solution with leading exponent r^" + alpha.str() +
                      ": the exponent must be 0 or h0-1 = " + (h0 - Rational(1)).str());
}

// ---------------------------------------------------------------------------
// Interior-scale (scattering) dictionary
// ---------------------------------------------------------------------------

struct InteriorScaleForm {
    Rational s;
    Rational n_minus_s;
    DensityField F;     ///< smooth branch (function-level factor of r^{n-s})
    DensityField G;     ///< second branch (function-level factor of r^s), smooth part
    DensityField G_log; ///< log r part of the second branch
    bool certificate = false; ///< normal-form operator identity verified
};

/// Re-express a solution as r^{n-s} F + r^s (G + log r * G_log) at the
/// function level (tau-trivialization) and certify that the normal-form
/// operator -(r d_r - 2s + n + 1) d_r - r Delta_x equals I.D on weight-w0
/// fields.
inline InteriorScaleForm interior_scale_form(const ExpansionSolution& sol, const Rational& s) {
    int n = sol.d - 1;
    if (!(s == sol.w0 + Rational(n)))
        throw DomainError("interior_scale_form: s must equal w0 + n (got s = " + s.str() + ")");
    InteriorScaleForm out;
    out.s = s;
    out.n_minus_s = Rational(n) - s;
    Rational h0 = Rational(sol.d) + Rational(2) * sol.w0;
    DensityField F(Rational(0), n, sol.logtau.signature());
    DensityField G = F, G_log = F;
    // u = r^{-w0} f = r^{n-s}(F + r^{2s-n} G-part); since h0 - 1 = 2s - n,
    // smooth terms r^p c land in F as r^p c and log/second-branch terms
    // r^{h0-1+k} c land in G as r^k c.
    for (const auto& t : sol.terms) {
        if (t.field.is_zero())
            continue;
        DensityField piece = t.field;
        piece.set_weight(Rational(0));
        if (sol.kind == OpKind::Second)
            G = G + piece.times_r_pow(t.sigma_power - (h0 - Rational(1)), Rational(0));
        else if (t.log)
            G_log = G_log + piece.times_r_pow(t.sigma_power - (h0 - Rational(1)), Rational(0));
        else
            F = F + piece.times_r_pow(t.sigma_power, Rational(0));
    }
    out.F = F;
    out.G = G;
    out.G_log = G_log;
    // certificate 1: the exact coefficient identity d + 2w0 - 2 = 2s - n - 1
    bool ok = (Rational(sol.d) + Rational(2) * sol.w0 - Rational(2) ==
               Rational(2) * s - Rational(n) - Rational(1));
    // certificate 2: the normal form -(r d_r - (2s-n-1)) d_r - r Delta_x
    // agrees with I.D on sample weight-w0 fields
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> coin(0, 2), cf(-3, 3);
    for (int trial = 0; trial < 5 && ok; ++trial) {
        DensityField g(sol.w0, n, sol.logtau.signature());
        for (int t = 0; t < 4; ++t) {
            std::vector<int> mono(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i)
                mono[static_cast<size_t>(i)] = coin(rng);
            g.add_term(coin(rng), 0, mono, Rational(cf(rng)));
        }
        if (g.is_zero())
            continue;
        DensityField dr = g.d_r();
        DensityField rddr = dr.d_r().times_r_pow(Rational(1), Rational(0));
        DensityField lapx(sol.w0, n, sol.logtau.signature());
        for (int i = 0; i < n; ++i) {
            DensityField dd = g.d_x(i).d_x(i).scaled(
                Rational(sol.logtau.signature()[static_cast<size_t>(i)]));
            if (!dd.is_zero())
                lapx = lapx + dd;
        }
        DensityField normal_form = rddr.scaled(Rational(-1)) +
                                   dr.scaled(Rational(2) * s - Rational(n) - Rational(1)) -
                                   lapx.times_r_pow(Rational(1), Rational(0));
        DensityField idg = idotd_apply(g, sol.d);
        idg.set_weight(sol.w0);
        ok = (normal_form == idg);
    }
    out.certificate = ok;
    return out;
}

} // namespace slcalc
