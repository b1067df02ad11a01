#pragma once

/**
 * @file model_checks.hpp
 * @brief Randomized structural checks tying the half-space model to the
 *        abstract calculus: the sl(2) realization identities, the
 *        tangentiality certificate, and word-level cross-validation of the
 *        rewriting engine against direct model computation.
 *
 * Everything here is exact; randomness only selects probe fields and words
 * (deterministic mt19937_64 seeds, so reports are reproducible).
 */

#include "halfspace.hpp"
#include "sl2.hpp"

#include <random>
#include <string>

namespace slcalc {

/// Random polynomial density field: up to `terms` monomials of coordinate
/// degree <= deg, optionally with r-powers up to rdeg.
inline DensityField random_polynomial_field(std::mt19937_64& rng, int n, const Rational& w,
                                            int deg, int rdeg = 0, std::vector<int> sig = {}) {
    DensityField f(w, n, std::move(sig));
    std::uniform_int_distribution<int> e(0, deg), rp(0, rdeg), cf(-4, 4);
    for (int t = 0; t < 4; ++t) {
        std::vector<int> mono(static_cast<size_t>(n), 0);
        int budget = deg;
        for (int i = 0; i < n && budget > 0; ++i) {
            int ei = e(rng) % (budget + 1);
            mono[static_cast<size_t>(i)] = ei;
            budget -= ei;
        }
        f.add_term(rp(rng), 0, mono, Rational(cf(rng)));
    }
    return f;
}

struct CheckReport {
    bool ok = true;
    long long cases = 0;
    std::string witness; ///< description of the first failure, if any

    void fail(std::string w) {
        if (ok) {
            ok = false;
            witness = std::move(w);
        }
    }
};

/// Verify the sl(2) realization on random polynomial fields:
/// [x,y] = (d+2w) id, [h,x] = 2x, [h,y] = -2y, the enveloping-algebra
/// identities [x^k,y] = k x^{k-1}(h+k-1) and [x,y^k] = k y^{k-1}(h-k+1)
/// for k <= 8, and random {x,y}-words against the abstract engine.
inline CheckReport sl2_realization_check(int d, int samples, uint64_t seed = 2024) {
    CheckReport rep;
    int n = d - 1;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> wnum(-6, 6), kdist(1, 8), coin(0, 1), len(0, 6);
    Sl2Engine eng; // generic weight; no series words appear, so h0 never does
    for (int s = 0; s < samples; ++s) {
        Rational w(wnum(rng), 2);
        DensityField f = random_polynomial_field(rng, n, w, 3, 2);
        if (f.is_zero())
            continue;
        ++rep.cases;
        Rational hval = Rational(d) + Rational(2) * w;
        auto x = [&](const DensityField& g) { return g.times_r(); };
        auto y = [&](const DensityField& g) { return y_apply(g, d); };
        // [x,y] f = (d+2w) f
        DensityField c1 = x(y(f)) - y(x(f));
        if (c1 != f.scaled(hval))
            rep.fail("[x,y] != (d+2w) id at w=" + w.str());
        // [h,x] f = 2 x f with h g = (d+2 weight(g)) g
        auto h = [&](const DensityField& g) {
            return g.scaled(Rational(d) + Rational(2) * g.weight());
        };
        if (h(x(f)) - x(h(f)) != x(f).scaled(Rational(2)))
            rep.fail("[h,x] != 2x at w=" + w.str());
        if (!(h(y(f)) - y(h(f)) + y(f).scaled(Rational(2))).is_zero())
            rep.fail("[h,y] != -2y at w=" + w.str());
        // [x^k, y] f = k x^{k-1} (h + k - 1) f
        {
            int k = kdist(rng);
            DensityField xk = f;
            for (int i = 0; i < k; ++i)
                xk = x(xk);
            DensityField lhs = y(xk);
            DensityField xyf = y(f);
            for (int i = 0; i < k; ++i)
                xyf = x(xyf);
            lhs = xyf - lhs; // [x^k,y] f = x^k y f - y x^k f
            DensityField rhs = f.scaled(hval + Rational(k - 1));
            for (int i = 0; i < k - 1; ++i)
                rhs = x(rhs);
            if (lhs != rhs.scaled(Rational(k)))
                rep.fail("[x^k,y] identity failed at k=" + std::to_string(k));
        }
        // [x, y^k] f = k y^{k-1} (h - k + 1) f
        {
            int k = kdist(rng);
            DensityField yk = y_pow_apply(k, f, d);
            DensityField lhs = x(yk) - y_pow_apply(k, x(f), d);
            DensityField rhs = y_pow_apply(k - 1, f.scaled(hval - Rational(k - 1)), d);
            if (lhs != rhs.scaled(Rational(k)))
                rep.fail("[x,y^k] identity failed at k=" + std::to_string(k));
        }
        // random word over {x,y}: abstract reduction == model computation
        {
            Word word;
            int L = len(rng);
            std::string wtxt;
            for (int i = 0; i < L; ++i) {
                bool isx = coin(rng);
                word.push_back(OpFactor::plain(isx ? Gen::X : Gen::Y));
                wtxt += isx ? 'x' : 'y';
            }
            Section sec = eng.make_section("f", RatFunc(hval));
            Form reduced = eng.reduce(word, sec);
            DensityField model_direct = f;
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                model_direct = (it->gen == Gen::X) ? x(model_direct) : y(model_direct);
            DensityField from_engine(model_direct.weight(), n, f.signature());
            for (const auto& t : reduced) {
                if (t.logx != 0 || t.xexp.shift != 0)
                    rep.fail("unexpected engine term in {x,y} word");
                long long ypow = 0;
                for (TailSym ts : t.tail)
                    ypow += (ts == TailSym::Y) ? 1 : 0;
                DensityField piece = y_pow_apply(ypow, f, d).scaled(t.coeff.constant_value());
                if (!t.xexp.a.is_zero())
                    piece = piece.times_r_pow(t.xexp.a, t.xexp.a);
                from_engine = from_engine + piece;
            }
            if (from_engine != model_direct)
                rep.fail("engine reduction mismatch on word '" + wtxt + "'");
        }
    }
    return rep;
}

/// Tangentiality of P_k: P_k(r g) is divisible by r for random g of weight
/// (k-n)/2 - 1; equivalently the restriction depends only on the boundary
/// values (checked with two extensions).
inline CheckReport tangentiality_check(long long k, int d, int samples, uint64_t seed = 77) {
    CheckReport rep;
    int n = d - 1;
    std::mt19937_64 rng(seed);
    Rational w0(k - n, 2);
    for (int s = 0; s < samples; ++s) {
        DensityField g = random_polynomial_field(rng, n, w0 - Rational(1), 3, 2);
        if (g.is_zero())
            continue;
        ++rep.cases;
        DensityField pk = y_pow_apply(k, g.times_r(), d);
        if (!pk.is_zero() && pk.min_r_order() < Rational(1))
            rep.fail("P_k(r g) not divisible by r at sample " + std::to_string(s));
    }
    return rep;
}

} // namespace slcalc
