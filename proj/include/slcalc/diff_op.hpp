#pragma once

/**
 * @file diff_op.hpp
 * @brief Explicit linear differential operators on half-space fields.
 *
 * Coefficients are polynomials in r only (the flat-model building block
 * -r*Delta + c*d_r has no boundary-coordinate coefficients and composition
 * preserves that), so composition via Leibniz is exact and cheap.
 */

#include "density_field.hpp"

#include <map>
#include <vector>

namespace slcalc {

/// Polynomial in r over Rational; index = power.
using RPoly = std::vector<Rational>;

namespace detail {
inline RPoly rpoly_trim(RPoly p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    return p;
}
inline RPoly rpoly_add(const RPoly& a, const RPoly& b) {
    RPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    return rpoly_trim(std::move(r));
}
inline RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty())
        return {};
    RPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return rpoly_trim(std::move(r));
}
inline RPoly rpoly_deriv(const RPoly& p) {
    if (p.size() <= 1)
        return {};
    RPoly r(p.size() - 1, Rational(0));
    for (size_t i = 1; i < p.size(); ++i)
        r[i - 1] = p[i] * Rational(static_cast<long long>(i));
    return r;
}
} // namespace detail

class LinDiffOp {
public:
    struct DerivKey {
        int dr = 0;
        std::vector<int> dx;
        friend bool operator<(const DerivKey& a, const DerivKey& b) {
            if (a.dr != b.dr)
                return a.dr < b.dr;
            return a.dx < b.dx;
        }
    };

private:
    int n_ = 0;
    std::map<DerivKey, RPoly> terms_;

    void add_raw(const DerivKey& k, const RPoly& c) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted)
            it->second = detail::rpoly_add(it->second, c);
        if (it->second.empty())
            terms_.erase(it);
    }

public:
    LinDiffOp() = default;
    explicit LinDiffOp(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<DerivKey, RPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static LinDiffOp identity(int n) {
        LinDiffOp op(n);
        op.add_raw(DerivKey{0, std::vector<int>(static_cast<size_t>(n), 0)}, RPoly{Rational(1)});
        return op;
    }

    void add_term(int dr, std::vector<int> dx, RPoly coeff) {
        if (static_cast<int>(dx.size()) != n_)
            throw InternalError("LinDiffOp: derivative arity mismatch");
        add_raw(DerivKey{dr, std::move(dx)}, detail::rpoly_trim(std::move(coeff)));
    }

    friend LinDiffOp operator+(LinDiffOp a, const LinDiffOp& b) {
        for (const auto& [k, c] : b.terms_)
            a.add_raw(k, c);
        return a;
    }
    LinDiffOp scaled(const Rational& s) const {
        LinDiffOp r = *this;
        for (auto& [k, c] : r.terms_)
            for (auto& x : c)
                x *= s;
        for (auto it = r.terms_.begin(); it != r.terms_.end();)
            it = detail::rpoly_trim(it->second).empty() ? r.terms_.erase(it) : std::next(it);
        return r;
    }

    /// Apply to a field; the weight of the result is the caller's business
    /// (this is a raw operator without conformal bookkeeping).
    DensityField apply(const DensityField& f) const {
        DensityField out(f.weight(), f.n(), f.signature());
        for (const auto& [k, coeff] : terms_) {
            DensityField g = f;
            for (int i = 0; i < k.dr; ++i)
                g = g.d_r();
            for (int i = 0; i < n_; ++i)
                for (int q = 0; q < k.dx[static_cast<size_t>(i)]; ++q)
                    g = g.d_x(i);
            for (size_t p = 0; p < coeff.size(); ++p) {
                if (coeff[p].is_zero())
                    continue;
                DensityField piece =
                    g.scaled(coeff[p]).times_r_pow(Rational(static_cast<long long>(p)), Rational(0));
                out = out.is_zero() ? piece : out + piece;
            }
        }
        return out;
    }

    /// Left-compose a single d/dr:  d_r (c(r) d^b f) = c'(r) d^b f + c(r) d_r d^b f.
    LinDiffOp pre_dr() const {
        LinDiffOp out(n_);
        for (const auto& [k, c] : terms_) {
            RPoly dc = detail::rpoly_deriv(c);
            if (!dc.empty())
                out.add_raw(k, dc);
            DerivKey nk = k;
            nk.dr += 1;
            out.add_raw(nk, c);
        }
        return out;
    }

    /// Left-compose a single d/dx_i (coefficients are r-only, so it passes).
    LinDiffOp pre_dx(int i) const {
        LinDiffOp out(n_);
        for (const auto& [k, c] : terms_) {
            DerivKey nk = k;
            nk.dx[static_cast<size_t>(i)] += 1;
            out.add_raw(nk, c);
        }
        return out;
    }

    /// Full composition a after b.
    friend LinDiffOp compose(const LinDiffOp& a, const LinDiffOp& b) {
        LinDiffOp out(b.n_);
        for (const auto& [k, c] : a.terms_) {
            LinDiffOp piece = b;
            for (int i = 0; i < k.dr; ++i)
                piece = piece.pre_dr();
            for (int i = 0; i < a.n_; ++i)
                for (int q = 0; q < k.dx[static_cast<size_t>(i)]; ++q)
                    piece = piece.pre_dx(i);
            for (auto& [pk, pc] : piece.terms_)
                out.add_raw(pk, detail::rpoly_mul(pc, c));
        }
        return out;
    }
};

} // namespace slcalc
