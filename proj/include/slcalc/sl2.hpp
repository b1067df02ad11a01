#pragma once

/**
 * @file sl2.hpp
 * @brief Term-rewriting engine for the operator algebra generated by
 *        x, y, h, log x, log tau acting on formal sections of definite weight.
 *
 * Rewrite axioms (h is always evaluated eagerly on the current acting
 * weight, never kept as a generator):
 *   [h,x] = 2x,  [h,y] = -2y,  [x,y] = h,
 *   [x^a, y] = x^{a-1} a (h + a - 1)          (formal exponents a),
 *   [h, logx] = 2,  [y, logx] = -x^{-1}(h-1),
 *   [h, logtau] = 2,  [x, logtau] = 0,
 * while words in {y, logtau} are left irreducible (no closed commutator for
 * [y, logtau] exists in the calculus; nothing is invented).
 *
 * Canonical form: sum of terms
 *     coeff * x^e * (logx)^l * T * section,
 * with e = a + shift*(h0-1), l >= 0, and T an irreducible word over
 * {Y, LOGTAU, T1}.  T1 is multiplication by a fixed auxiliary section of
 * weight -1 (used to probe independence of the choice of the second scale);
 * it commutes with x and logx and satisfies h T1 = T1 (h - 2), with [y, T1]
 * opaque, exactly like logtau.
 *
 * The crux of the log-operator verifications: terms containing logx or
 * logtau are NOT h-eigenvectors; h(logtau s) = w_s logtau s + 2 s.  applyH
 * therefore returns a sum: the eigenvalue part plus one correction term for
 * every logx factor and every logtau in the tail.
 *
 * The Weyl block (logtau y^m)_W = (logtau y^m + y^m logtau)/2 is atomic.  It
 * carries one extra axiom, registered only at its stated acting weight:
 *     [(logtau y^m)_W , x] f1 = (1 - h0) y^{m-1} f1,   h0 = m+1,
 * valid when it meets exactly x * f1 with f1 an honest eigensection of
 * weight h0-2 (empty tail, no logs).  In any other context it expands into
 * its two ordered halves (its literal definition).
 */

#include "series_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace slcalc {

enum class Gen : uint8_t { X, Y, H, LogX, LogTau, T1 };
enum class TailSym : uint8_t { Y, LogTau, T1 };

/// Formal x-exponent a + shift*(h0-1); the only exponent classes the
/// calculus uses are integers and integer translates of h0-1.
struct XExp {
    Rational a{0};
    long long shift = 0;

    bool is_zero() const { return a.is_zero() && shift == 0; }
    RatFunc rf() const {
        RatFunc e(a);
        if (shift != 0)
            e += RatFunc(shift) * (RatFunc::h0() - RatFunc(1));
        return e;
    }
    friend XExp operator+(const XExp& l, const XExp& r) {
        return XExp{l.a + r.a, l.shift + r.shift};
    }
    friend bool operator==(const XExp& l, const XExp& r) {
        return l.shift == r.shift && l.a == r.a;
    }
    friend bool operator<(const XExp& l, const XExp& r) {
        if (l.shift != r.shift)
            return l.shift < r.shift;
        return l.a < r.a;
    }
    std::string str() const {
        if (shift == 0)
            return a.str();
        std::string s = std::to_string(shift) + "*(h0-1)";
        if (!a.is_zero())
            s += (a.is_negative() ? "" : "+") + a.str();
        return s;
    }
};

/// A formal section with a definite h-eigenvalue (RatFunc in h0, a constant
/// when the weight is specialized).
struct Section {
    std::string label;
    RatFunc weight;

    friend bool operator==(const Section& a, const Section& b) {
        return a.label == b.label && a.weight == b.weight;
    }
};

struct Term {
    RatFunc coeff;
    XExp xexp;
    int logx = 0;
    std::vector<TailSym> tail;
    Section section;

    /// Canonical ordering key (coefficient excluded).
    auto key() const {
        return std::make_tuple(xexp.shift, xexp.a, logx, tail, section.label);
    }
    std::string str() const {
        std::string s = coeff.str();
        if (!xexp.is_zero())
            s += " x^(" + xexp.str() + ")";
        if (logx > 0)
            s += " logx" + (logx > 1 ? "^" + std::to_string(logx) : "");
        for (TailSym t : tail)
            s += (t == TailSym::Y) ? " y" : (t == TailSym::LogTau ? " logtau" : " t1");
        s += " " + section.label;
        return s;
    }
};

using Form = std::vector<Term>;

/// Merge like terms, drop zeros, sort by canonical key.
inline Form normalize(Form f) {
    std::sort(f.begin(), f.end(), [](const Term& a, const Term& b) { return a.key() < b.key(); });
    Form out;
    for (auto& t : f) {
        if (!out.empty() && out.back().key() == t.key())
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero())
            out.pop_back();
    }
    return out;
}

inline Form operator+(Form a, const Form& b) {
    a.insert(a.end(), b.begin(), b.end());
    return normalize(std::move(a));
}

inline Form scaled(Form f, const RatFunc& c) {
    for (auto& t : f)
        t.coeff *= c;
    return f;
}

/// One factor of an operator word (leftmost factor acts last).
struct OpFactor {
    enum class Kind { Plain, XPow, Series, Weyl } kind = Kind::Plain;
    Gen gen = Gen::X;            // Plain
    XExp xpow;                   // XPow
    FormalSeries series;         // Series: the normal-ordered sum of c_k x^k y^k
    long long weyl_m = 0;        // Weyl: (logtau y^m)_W

    static OpFactor plain(Gen g) { OpFactor f; f.kind = Kind::Plain; f.gen = g; return f; }
    static OpFactor x_pow(XExp e) { OpFactor f; f.kind = Kind::XPow; f.xpow = e; return f; }
    static OpFactor normal_series(FormalSeries s) {
        OpFactor f; f.kind = Kind::Series; f.series = std::move(s); return f;
    }
    static OpFactor weyl(long long m) { OpFactor f; f.kind = Kind::Weyl; f.weyl_m = m; return f; }
};

using Word = std::vector<OpFactor>;

/// Formal rational combination of words, applied to a common target section.
struct OpExpr {
    std::vector<std::pair<RatFunc, Word>> parts;
    void add(RatFunc c, Word w) { parts.emplace_back(std::move(c), std::move(w)); }
};

/// prefix * expr (every word gains the prefix on the left).
inline OpExpr with_left(const Word& prefix, OpExpr e) {
    for (auto& [c, w] : e.parts)
        w.insert(w.begin(), prefix.begin(), prefix.end());
    return e;
}

/// expr * suffix (every word gains the suffix on the right, i.e. applied first).
inline OpExpr with_right(OpExpr e, const Word& suffix) {
    for (auto& [c, w] : e.parts)
        w.insert(w.end(), suffix.begin(), suffix.end());
    return e;
}

/// a + scale * b as one expression.
inline OpExpr combined(OpExpr a, const OpExpr& b, const RatFunc& scale) {
    for (const auto& [c, w] : b.parts)
        a.add(c * scale, w);
    return a;
}

struct Sl2Options {
    WeightParam h0 = WeightParam::generic();
    bool contracted = false; ///< Inonu-Wigner contraction: [x,y] = 0
};

class Sl2Engine {
    Sl2Options opt_;

    static int count_weight_drops(const std::vector<TailSym>& tail) {
        int n = 0;
        for (TailSym t : tail)
            if (t == TailSym::Y || t == TailSym::T1)
                ++n;
        return n;
    }

    static Form shift_x(Form f, const XExp& e) {
        for (auto& t : f)
            t.xexp = t.xexp + e;
        return f;
    }

public:
    explicit Sl2Engine(Sl2Options opt = {}) : opt_(std::move(opt)) {}
    const Sl2Options& options() const { return opt_; }

    /// Fold h0-1 shifts into plain rationals when the weight is specialized.
    XExp make_xexp(Rational a, long long shift = 0) const {
        if (shift != 0 && !opt_.h0.is_generic()) {
            a += Rational(shift) * (*opt_.h0.value - Rational(1));
            shift = 0;
        }
        return XExp{std::move(a), shift};
    }

    /// A section whose weight is the given rational function of generic h0,
    /// specialized if the engine runs at a concrete weight.
    Section make_section(const std::string& label, const RatFunc& weight_in_h0) const {
        if (opt_.h0.is_generic())
            return Section{label, weight_in_h0};
        return Section{label, RatFunc(weight_in_h0.eval(*opt_.h0.value, "section weight"))};
    }

    // -- single-generator applications (each returns a normalized Form) --

    /// h applied to one term: eigen part + log corrections.
    Form apply_h(const Term& term) const {
        Form out;
        RatFunc lambda = term.section.weight + RatFunc(2) * term.xexp.rf() -
                         RatFunc(2 * count_weight_drops(term.tail));
        Term eig = term;
        eig.coeff *= lambda;
        out.push_back(std::move(eig));
        if (term.logx > 0) {
            Term t = term;
            t.logx -= 1;
            t.coeff *= RatFunc(2 * term.logx);
            out.push_back(std::move(t));
        }
        for (size_t p = 0; p < term.tail.size(); ++p) {
            if (term.tail[p] != TailSym::LogTau)
                continue;
            Term t = term;
            t.tail.erase(t.tail.begin() + static_cast<long>(p));
            t.coeff *= RatFunc(2);
            out.push_back(std::move(t));
        }
        return normalize(std::move(out));
    }

    /// (h + c0) applied to one term.
    Form apply_h_plus(const RatFunc& c0, const Term& term) const {
        Form out = apply_h(term);
        Term t = term;
        t.coeff *= c0;
        out.push_back(std::move(t));
        return normalize(std::move(out));
    }

    Form apply_y(const Term& term) const {
        if (!term.xexp.is_zero()) {
            // y x^e = x^e y - e x^{e-1} (h + e - 1)
            XExp e = term.xexp;
            Term base = term;
            base.xexp = XExp{};
            Form out = shift_x(apply_y(base), e);
            if (!opt_.contracted) {
                RatFunc e_rf = e.rf();
                if (!opt_.h0.is_generic())
                    e_rf = RatFunc(e_rf.eval(*opt_.h0.value, "x-exponent"));
                Form corr = apply_h_plus(e_rf - RatFunc(1), base);
                XExp em1 = e;
                em1.a -= Rational(1);
                corr = shift_x(scaled(std::move(corr), -e_rf), em1);
                out = std::move(out) + corr;
            }
            return out;
        }
        if (term.logx > 0) {
            // y logx = logx y - x^{-1} (h - 1)
            Term base = term;
            base.logx -= 1;
            Form main = apply_y(base);
            for (auto& t : main)
                t.logx += 1;
            Form corr = apply_h_plus(RatFunc(-1), base);
            corr = shift_x(scaled(std::move(corr), RatFunc(-1)), XExp{Rational(-1), 0});
            return normalize(std::move(main)) + corr;
        }
        Term t = term;
        t.tail.insert(t.tail.begin(), TailSym::Y);
        return {std::move(t)};
    }

    Form apply_gen(Gen g, const Term& term) const {
        switch (g) {
        case Gen::X: {
            Term t = term;
            t.xexp.a += Rational(1);
            return {std::move(t)};
        }
        case Gen::Y:
            return apply_y(term);
        case Gen::H:
            return apply_h(term);
        case Gen::LogX: {
            Term t = term;
            t.logx += 1;
            return {std::move(t)};
        }
        case Gen::LogTau: {
            Term t = term;
            t.tail.insert(t.tail.begin(), TailSym::LogTau);
            return {std::move(t)};
        }
        case Gen::T1: {
            Term t = term;
            t.tail.insert(t.tail.begin(), TailSym::T1);
            return {std::move(t)};
        }
        }
        throw InternalError("apply_gen: unknown generator");
    }

    Form apply_y_pow(long long m, Form f) const {
        for (long long i = 0; i < m; ++i) {
            Form next;
            for (const auto& t : f) {
                Form r = apply_y(t);
                next.insert(next.end(), r.begin(), r.end());
            }
            f = normalize(std::move(next));
        }
        return f;
    }

    /// The atomic Weyl block (logtau y^m)_W.
    Form apply_weyl(long long m, const Term& term) const {
        if (m < 0)
            throw DomainError("Weyl block: m >= 0 required");
        bool rule_applies = term.logx == 0 && term.tail.empty() && term.xexp.shift == 0 &&
                            term.xexp.a == Rational(1) && term.section.weight.is_constant() &&
                            term.section.weight.constant_value() == Rational(m - 1) && m >= 1;
        if (rule_applies) {
            // (W) x f1 = x (W) f1 + (1 - h0) y^{m-1} f1,  h0 = m+1
            Term base = term;
            base.xexp = XExp{};
            Form out = shift_x(apply_weyl(m, base), XExp{Rational(1), 0});
            Term extra = base;
            extra.coeff *= RatFunc(Rational(-m));
            extra.tail.insert(extra.tail.begin(), static_cast<size_t>(m - 1), TailSym::Y);
            out.push_back(std::move(extra));
            return normalize(std::move(out));
        }
        Form half1 = apply_y_pow(m, {term});
        Form tagged1;
        for (const auto& t : half1) {
            Form r = apply_gen(Gen::LogTau, t);
            tagged1.insert(tagged1.end(), r.begin(), r.end());
        }
        Form half2;
        {
            Form r = apply_gen(Gen::LogTau, term);
            half2 = apply_y_pow(m, std::move(r));
        }
        return scaled(normalize(std::move(tagged1)) + half2, RatFunc(Rational(1, 2)));
    }

    /// Normal-ordered series: sum_k c_k x^k y^k, applied termwise.  At a
    /// specialized weight, generic coefficients are evaluated (PoleError
    /// names the exceptional weight).
    Form apply_series(const FormalSeries& s, const Term& term) const {
        Form out;
        Form cur = {term};
        for (int k = 0; k <= s.order(); ++k) {
            RatFunc c = s.coeff(k);
            if (!opt_.h0.is_generic() && !c.is_constant())
                c = RatFunc(c.eval(*opt_.h0.value, "series coefficient k=" + std::to_string(k)));
            if (!c.is_zero()) {
                Form piece = shift_x(cur, XExp{Rational(k), 0});
                piece = scaled(std::move(piece), c);
                out.insert(out.end(), piece.begin(), piece.end());
            }
            if (k < s.order()) {
                Form next;
                for (const auto& t : cur) {
                    Form r = apply_y(t);
                    next.insert(next.end(), r.begin(), r.end());
                }
                cur = normalize(std::move(next));
            }
        }
        return normalize(std::move(out));
    }

    Form apply_factor(const OpFactor& f, const Form& form) const {
        Form out;
        for (const auto& t : form) {
            Form r;
            switch (f.kind) {
            case OpFactor::Kind::Plain:
                r = apply_gen(f.gen, t);
                break;
            case OpFactor::Kind::XPow: {
                Term s = t;
                s.xexp = s.xexp + f.xpow;
                r = {std::move(s)};
                break;
            }
            case OpFactor::Kind::Series:
                r = apply_series(f.series, t);
                break;
            case OpFactor::Kind::Weyl:
                r = apply_weyl(f.weyl_m, t);
                break;
            }
            out.insert(out.end(), r.begin(), r.end());
        }
        return normalize(std::move(out));
    }

    /// Apply a word (leftmost factor acts last, i.e. right-to-left).
    Form apply_word(const Word& w, Form form) const {
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            form = apply_factor(*it, std::move(form));
        return form;
    }

    Form reduce(const Word& w, const Section& target) const {
        Term unit;
        unit.coeff = RatFunc(1);
        unit.section = target;
        return apply_word(w, {std::move(unit)});
    }

    Form reduce_expr(const OpExpr& e, const Section& target) const {
        Form out;
        for (const auto& [c, w] : e.parts) {
            Form r = scaled(reduce(w, target), c);
            out.insert(out.end(), r.begin(), r.end());
        }
        return normalize(std::move(out));
    }

    /// reduce(ab) - reduce(ba).
    Form commutator(const Word& a, const Word& b, const Section& target) const {
        Word ab = a, ba = b;
        ab.insert(ab.end(), b.begin(), b.end());
        ba.insert(ba.end(), a.begin(), a.end());
        return reduce(ab, target) + scaled(reduce(ba, target), RatFunc(-1));
    }

    /// sum_k c_k reduce(x^k y^k, target), truncated to x-degree < N.
    Form apply_series_operator(const FormalSeries& s, const Section& target, int N) const {
        Term unit;
        unit.coeff = RatFunc(1);
        unit.section = target;
        return filter_below_degree(apply_series(s, unit), N);
    }

    /// Keep terms whose rational exponent part a is < N.  Generic h0-1
    /// shifts in the exponent do not count toward the degree: truncation
    /// residuals of an order-N series sit at a = N whether or not the word
    /// carries an x^{h0-1} prefactor, so this cut is uniform in h0.
    static Form filter_below_degree(Form f, int N) {
        Form out;
        for (auto& t : f)
            if (t.xexp.a < Rational(N))
                out.push_back(std::move(t));
        return out;
    }
};

/// Result of a vanishing check up to a truncation degree.
struct VerifyResult {
    bool zero = false;
    Form residual; ///< offending terms below the degree cut, canonical order

    std::string first_offender() const {
        return residual.empty() ? std::string() : residual.front().str();
    }
};

inline VerifyResult verify_zero(const Sl2Engine& eng, const OpExpr& expr, const Section& target,
                                int N) {
    VerifyResult r;
    r.residual = Sl2Engine::filter_below_degree(eng.reduce_expr(expr, target), N);
    r.zero = r.residual.empty();
    return r;
}

// ---------------------------------------------------------------------------
// Operator-word builders for the solution operators.
// ---------------------------------------------------------------------------

enum class LogOpVariant {
    Weyl,       ///< the canonical operator (Weyl-averaged logtau block)
    Unaveraged, ///< logtau y^m without averaging (extension-dependent)
    TauShifted  ///< Weyl variant with logtau replaced by logtau + x t1
};

namespace detail {
inline void append_y(Word& w, long long m) {
    for (long long i = 0; i < m; ++i)
        w.push_back(OpFactor::plain(Gen::Y));
}

/// The series z^off * S as a normal-ordered factor.
inline FormalSeries offset_series(const FormalSeries& s, long long off) {
    FormalSeries r(s.order() + static_cast<int>(off));
    for (int k = 0; k <= s.order(); ++k)
        r.coeff(k + static_cast<int>(off)) = s.coeff(k);
    return r;
}
} // namespace detail

/// Build the operator expression of a SolutionOperatorSpec for the abstract
/// engine.  XPow exponents are folded against the engine's weight so the two
/// must agree on h0.
inline OpExpr solution_op_expr(const Sl2Engine& eng, const SolutionOperatorSpec& spec,
                               LogOpVariant variant = LogOpVariant::Weyl) {
    OpExpr e;
    switch (spec.kind) {
    case OpKind::First:
        e.add(RatFunc(1), {OpFactor::normal_series(*spec.k)});
        return e;
    case OpKind::Second:
        e.add(RatFunc(1),
              {OpFactor::x_pow(eng.make_xexp(Rational(0), 1)), OpFactor::normal_series(*spec.kbar)});
        return e;
    case OpKind::Log:
    case OpKind::LogDensity:
        break;
    }
    long long h0 = spec.h0.as_small_int();
    long long m = spec.y_power;
    if (h0 == 1) {
        e.add(RatFunc(1), {OpFactor::plain(Gen::LogX), OpFactor::normal_series(*spec.kbar)});
        Word tau_block = {OpFactor::normal_series(*spec.kbar), OpFactor::plain(Gen::LogTau)};
        e.add(RatFunc(-1), std::move(tau_block));
        if (variant == LogOpVariant::TauShifted)
            e.add(RatFunc(-1), {OpFactor::normal_series(*spec.kbar), OpFactor::plain(Gen::X),
                                OpFactor::plain(Gen::T1)});
        e.add(RatFunc(1),
              {OpFactor::normal_series(detail::offset_series(*spec.h_block, spec.z_offset))});
        return e;
    }
    RatFunc inv_c1 = RatFunc(spec.c1->reciprocal());
    e.add(RatFunc(1), {OpFactor::normal_series(*spec.f_poly)});
    e.add(-inv_c1, {OpFactor::normal_series(detail::offset_series(*spec.h_block, spec.z_offset))});
    {
        Word w = {OpFactor::x_pow(eng.make_xexp(Rational(0), 1)), OpFactor::plain(Gen::LogX),
                  OpFactor::normal_series(*spec.kbar)};
        detail::append_y(w, m);
        e.add(-inv_c1, std::move(w));
    }
    if (variant == LogOpVariant::Unaveraged) {
        Word w = {OpFactor::x_pow(eng.make_xexp(Rational(0), 1)),
                  OpFactor::normal_series(*spec.kbar), OpFactor::plain(Gen::LogTau)};
        detail::append_y(w, m);
        e.add(inv_c1, std::move(w));
    } else {
        Word w = {OpFactor::x_pow(eng.make_xexp(Rational(0), 1)),
                  OpFactor::normal_series(*spec.kbar), OpFactor::weyl(m)};
        e.add(inv_c1, std::move(w));
        if (variant == LogOpVariant::TauShifted) {
            // (logtau + x t1  y^m)_W - (logtau y^m)_W = (x t1 y^m + y^m x t1)/2
            RatFunc half = inv_c1 * RatFunc(Rational(1, 2));
            Word w1 = {OpFactor::x_pow(eng.make_xexp(Rational(0), 1)),
                       OpFactor::normal_series(*spec.kbar), OpFactor::plain(Gen::X),
                       OpFactor::plain(Gen::T1)};
            detail::append_y(w1, m);
            e.add(half, std::move(w1));
            Word w2 = {OpFactor::x_pow(eng.make_xexp(Rational(0), 1)),
                       OpFactor::normal_series(*spec.kbar)};
            detail::append_y(w2, m);
            w2.push_back(OpFactor::plain(Gen::X));
            w2.push_back(OpFactor::plain(Gen::T1));
            e.add(half, std::move(w2));
        }
    }
    return e;
}

/// The residue the unaveraged operator leaves on x f1:
/// x :z^{h0-2} Kbar(z): f1 / ((h0-2)!)^2, as an operator expression.
inline OpExpr unaveraged_leftover_expr(const SolutionOperatorSpec& spec) {
    long long h0 = spec.h0.as_small_int();
    if (h0 < 2)
        throw DomainError("unaveraged_leftover_expr: h0 >= 2 required");
    OpExpr e;
    RatFunc c = RatFunc(factorial(h0 - 2) * factorial(h0 - 2)).reciprocal();
    e.add(c, {OpFactor::plain(Gen::X),
              OpFactor::normal_series(detail::offset_series(*spec.kbar, h0 - 2))});
    return e;
}

} // namespace slcalc
