#pragma once

/**
 * @file density_field.hpp
 * @brief Polynomial conformal-density fields on the flat half-space model.
 *
 * A DensityField is a finite sum of terms c * r^j * (log r)^l * monomial(x)
 * with an optional global prefactor r^alpha (alpha rational), tagged with a
 * conformal weight w and a boundary signature.  Canonical form: like terms
 * merged, zeros dropped, and alpha normalized so the body has a j = 0 term
 * whenever the field is nonzero.
 *
 * Laurent powers of r are admitted (j may be pushed negative through the
 * alpha normalization) because the calculus produces x^{-1} terms; fractional
 * leading exponents of second-kind solutions live in alpha.
 */

#include "errors.hpp"
#include "rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace slcalc {

namespace detail {
inline std::string monomial_str(const std::vector<int>& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1)
            s += "^" + std::to_string(e[i]);
    }
    return s;
}
} // namespace detail

/// Restriction of a density field to the boundary r = 0: a polynomial in the
/// boundary coordinates with a conformal weight.
class BoundaryField {
    Rational w_{0};
    int n_ = 0;
    std::map<std::vector<int>, Rational> poly_;

    void trim() {
        for (auto it = poly_.begin(); it != poly_.end();)
            it = it->second.is_zero() ? poly_.erase(it) : std::next(it);
    }

public:
    BoundaryField() = default;
    BoundaryField(Rational w, int n) : w_(std::move(w)), n_(n) {}

    const Rational& weight() const { return w_; }
    void set_weight(Rational w) { w_ = std::move(w); }
    int n() const { return n_; }
    bool is_zero() const { return poly_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return poly_; }

    void add_term(const std::vector<int>& mono, const Rational& c) {
        if (static_cast<int>(mono.size()) != n_)
            throw InternalError("BoundaryField: monomial arity mismatch");
        auto [it, inserted] = poly_.emplace(mono, c);
        if (!inserted)
            it->second += c;
        if (it->second.is_zero())
            poly_.erase(it);
    }

    friend BoundaryField operator+(BoundaryField a, const BoundaryField& b) {
        for (const auto& [m, c] : b.poly_)
            a.add_term(m, c);
        return a;
    }
    BoundaryField scaled(const Rational& s) const {
        BoundaryField r = *this;
        for (auto& [m, c] : r.poly_)
            c *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const BoundaryField& a, const BoundaryField& b) {
        return a.w_ == b.w_ && a.n_ == b.n_ && a.poly_ == b.poly_;
    }

    /// Boundary Laplacian sum_i eps_i d^2/dx_i^2 (analyst's sign).
    BoundaryField laplacian(const std::vector<int>& sig) const {
        BoundaryField out(w_, n_);
        for (const auto& [m, c] : poly_)
            for (int i = 0; i < n_; ++i)
                if (m[static_cast<size_t>(i)] >= 2) {
                    std::vector<int> e = m;
                    int p = e[static_cast<size_t>(i)];
                    e[static_cast<size_t>(i)] -= 2;
                    out.add_term(e, c * Rational(p) * Rational(p - 1) *
                                        Rational(sig[static_cast<size_t>(i)]));
                }
        return out;
    }

    /// Ratio b/a when b = s*a for a single scalar s; nullopt-like failure is
    /// signalled by returning false.
    friend bool proportional(const BoundaryField& a, const BoundaryField& b, Rational& s_out) {
        if (a.is_zero())
            return b.is_zero();
        const auto& [m0, c0] = *a.poly_.begin();
        auto it = b.poly_.find(m0);
        if (it == b.poly_.end())
            return false;
        Rational s = it->second / c0;
        return b == a.scaled(s) ? (s_out = s, true) : false;
    }

    std::string str() const {
        if (poly_.empty())
            return "0";
        std::string out;
        for (const auto& [m, c] : poly_) {
            std::string mono = detail::monomial_str(m);
            Rational mag = abs(c);
            if (out.empty())
                out += c.is_negative() ? "-" : "";
            else
                out += c.is_negative() ? "-" : "+";
            if (mono.empty())
                out += mag.str();
            else if (mag.is_one())
                out += mono;
            else
                out += mag.str() + "*" + mono;
        }
        return out;
    }
};

class DensityField {
public:
    /// One body term r^j (log r)^l x^mono; the map value is its coefficient.
    struct Key {
        int j = 0;
        int l = 0;
        std::vector<int> mono;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.j != b.j)
                return a.j < b.j;
            if (a.l != b.l)
                return a.l < b.l;
            return a.mono < b.mono;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.j == b.j && a.l == b.l && a.mono == b.mono;
        }
    };

private:
    Rational w_{0};
    int n_ = 0;
    std::vector<int> sig_;
    Rational alpha_{0};
    std::map<Key, Rational> body_;

    void normalize() {
        for (auto it = body_.begin(); it != body_.end();)
            it = it->second.is_zero() ? body_.erase(it) : std::next(it);
        if (body_.empty()) {
            alpha_ = Rational(0);
            return;
        }
        int j0 = body_.begin()->first.j; // map is ordered by j first
        if (j0 != 0) {
            alpha_ += Rational(j0);
            std::map<Key, Rational> shifted;
            for (auto& [k, c] : body_) {
                Key nk = k;
                nk.j -= j0;
                shifted.emplace(std::move(nk), std::move(c));
            }
            body_ = std::move(shifted);
        }
    }

    void require_compatible(const DensityField& o) const {
        if (n_ != o.n_ || sig_ != o.sig_)
            throw InternalError("DensityField: mixing different boundary setups");
    }

public:
    DensityField() = default;
    /// Zero field of a given weight over n boundary coordinates (all-plus
    /// signature unless given).
    DensityField(Rational w, int n, std::vector<int> sig = {})
        : w_(std::move(w)), n_(n), sig_(std::move(sig)) {
        if (sig_.empty())
            sig_.assign(static_cast<size_t>(n), 1);
        if (static_cast<int>(sig_.size()) != n)
            throw DomainError("DensityField: signature length != n");
    }

    static DensityField constant(const Rational& c, const Rational& w, int n,
                                 std::vector<int> sig = {}) {
        DensityField f(w, n, std::move(sig));
        f.add_term(0, 0, std::vector<int>(static_cast<size_t>(n), 0), c);
        return f;
    }

    const Rational& weight() const { return w_; }
    void set_weight(Rational w) { w_ = std::move(w); }
    int n() const { return n_; }
    const std::vector<int>& signature() const { return sig_; }
    const Rational& alpha() const { return alpha_; }
    const std::map<Key, Rational>& body() const { return body_; }
    bool is_zero() const { return body_.empty(); }

    void add_term(int j, int l, const std::vector<int>& mono, const Rational& c) {
        if (static_cast<int>(mono.size()) != n_)
            throw InternalError("DensityField: monomial arity mismatch");
        if (c.is_zero())
            return;
        // incoming j is relative to the current alpha
        auto [it, inserted] = body_.emplace(Key{j, l, mono}, c);
        if (!inserted)
            it->second += c;
        normalize();
    }

    friend bool operator==(const DensityField& a, const DensityField& b) {
        return a.w_ == b.w_ && a.n_ == b.n_ && a.sig_ == b.sig_ && a.alpha_ == b.alpha_ &&
               a.body_ == b.body_;
    }
    friend bool operator!=(const DensityField& a, const DensityField& b) { return !(a == b); }

    friend DensityField operator+(const DensityField& a, const DensityField& b) {
        a.require_compatible(b);
        if (a.is_zero()) {
            DensityField r = b;
            if (!b.is_zero() && a.w_ != b.w_)
                throw WeightMismatchError("DensityField: adding different weights");
            r.w_ = b.is_zero() ? a.w_ : b.w_;
            return r;
        }
        if (b.is_zero())
            return a;
        if (a.w_ != b.w_)
            throw WeightMismatchError("DensityField: adding different weights");
        // bring both to a common prefactor; the offset must be an integer
        Rational diff = b.alpha_ - a.alpha_;
        if (!diff.is_integer())
            throw DomainError("DensityField: adding fields with incompatible r^alpha prefactors");
        DensityField r = a;
        int off = static_cast<int>(diff.num());
        for (const auto& [k, c] : b.body_) {
            Key nk = k;
            nk.j += off; // fixed offset: normalize only once, below
            r.body_[nk] += c;
        }
        r.normalize();
        return r;
    }
    friend DensityField operator-(const DensityField& a, const DensityField& b) {
        return a + b.scaled(Rational(-1));
    }

    DensityField scaled(const Rational& s) const {
        DensityField r = *this;
        if (s.is_zero()) {
            r.body_.clear();
            r.alpha_ = Rational(0);
            return r;
        }
        for (auto& [k, c] : r.body_)
            c *= s;
        return r;
    }

    /// Product of fields: weights and prefactors add, log degrees add.
    friend DensityField operator*(const DensityField& a, const DensityField& b) {
        a.require_compatible(b);
        DensityField r(a.w_ + b.w_, a.n_, a.sig_);
        r.alpha_ = a.alpha_ + b.alpha_;
        for (const auto& [ka, ca] : a.body_)
            for (const auto& [kb, cb] : b.body_) {
                std::vector<int> m = ka.mono;
                for (size_t i = 0; i < m.size(); ++i)
                    m[i] += kb.mono[i];
                r.add_term(ka.j + kb.j, ka.l + kb.l, m, ca * cb);
            }
        return r;
    }

    /// Multiply by r^p (p rational): weight increases by p's role only when
    /// the caller is implementing the operator x; here only the exponent and
    /// weight bookkeeping requested are applied.
    DensityField times_r_pow(const Rational& p, const Rational& weight_shift) const {
        DensityField r = *this;
        if (!r.is_zero())
            r.alpha_ += p;
        r.w_ += weight_shift;
        return r;
    }

    /// The operator x: multiplication by r, weight +1.
    DensityField times_r() const { return times_r_pow(Rational(1), Rational(1)); }

    DensityField times_logr() const {
        DensityField r = *this;
        std::map<Key, Rational> nb;
        for (const auto& [k, c] : r.body_) {
            Key nk = k;
            nk.l += 1;
            nb.emplace(nk, c);
        }
        r.body_ = std::move(nb);
        return r;
    }

    /// d/dr, handling the global r^alpha prefactor and log r factors:
    /// d/dr [r^b (log r)^l] = b r^{b-1} (log r)^l + l r^{b-1} (log r)^{l-1}.
    DensityField d_r() const {
        DensityField out(w_, n_, sig_);
        out.alpha_ = alpha_ - Rational(1);
        for (const auto& [k, c] : body_) {
            Rational b = alpha_ + Rational(k.j);
            if (!b.is_zero())
                out.body_[k] += c * b; // same j, exponent drop absorbed in alpha
            if (k.l > 0) {
                Key nk = k;
                nk.l -= 1;
                out.body_[nk] += c * Rational(k.l);
            }
        }
        out.normalize();
        if (out.is_zero())
            out.alpha_ = Rational(0);
        return out;
    }

    DensityField d_x(int i) const {
        if (i < 0 || i >= n_)
            throw InternalError("DensityField: coordinate index out of range");
        DensityField out(w_, n_, sig_);
        out.alpha_ = alpha_;
        for (const auto& [k, c] : body_) {
            int p = k.mono[static_cast<size_t>(i)];
            if (p == 0)
                continue;
            Key nk = k;
            nk.mono[static_cast<size_t>(i)] -= 1;
            out.body_[nk] += c * Rational(p);
        }
        out.normalize();
        return out;
    }

    /// Delta = d_r^2 + sum_i eps_i d_{x_i}^2 (analyst's convention).
    DensityField laplacian() const {
        DensityField out = d_r().d_r();
        for (int i = 0; i < n_; ++i) {
            DensityField dd = d_x(i).d_x(i).scaled(Rational(sig_[static_cast<size_t>(i)]));
            if (!dd.is_zero())
                out = out.is_zero() ? dd : out + dd;
        }
        return out;
    }

    /// Smallest r-exponent alpha + j present (the "order" of the field);
    /// throws on the zero field.
    Rational min_r_order() const {
        if (is_zero())
            throw DomainError("DensityField: order of zero field");
        return alpha_; // normalized: min j = 0
    }

    bool has_log_terms() const {
        for (const auto& [k, c] : body_)
            if (k.l > 0)
                return true;
        return false;
    }

    /// Drop all terms whose total r-exponent alpha + j is >= cutoff.
    DensityField truncate_r_order(const Rational& cutoff) const {
        DensityField out(w_, n_, sig_);
        out.alpha_ = alpha_;
        for (const auto& [k, c] : body_)
            if (alpha_ + Rational(k.j) < cutoff)
                out.body_.emplace(k, c);
        out.normalize();
        if (out.is_zero())
            out.alpha_ = Rational(0);
        return out;
    }

    /// Restriction to r = 0.  Terms with positive r-exponent die; negative
    /// exponents and surviving log factors are domain errors (genuine
    /// divisibility matters for tangentiality, no silent truncation).
    BoundaryField restrict_boundary() const {
        BoundaryField out(w_, n_);
        for (const auto& [k, c] : body_) {
            Rational b = alpha_ + Rational(k.j);
            if (b < Rational(0))
                throw DomainError("restriction at r=0 of a field with negative r-powers");
            if (b.is_zero()) {
                if (k.l > 0)
                    throw DomainError("restriction at r=0 of a field with log r terms");
                out.add_term(k.mono, c);
            }
        }
        return out;
    }

    /// The r-independent extension of the boundary restriction.
    static DensityField extend_r_independent(const BoundaryField& b, const Rational& w, int n,
                                             std::vector<int> sig = {}) {
        DensityField f(w, n, std::move(sig));
        for (const auto& [m, c] : b.terms())
            f.add_term(0, 0, m, c);
        return f;
    }

    /// Canonical textual form matching the CLI field grammar (integer powers
    /// only; a fractional prefactor is printed as r^(p/q) and is display-only).
    std::string str() const {
        if (body_.empty())
            return "0";
        std::string out;
        for (const auto& [k, c] : body_) {
            Rational b = alpha_ + Rational(k.j);
            std::vector<std::string> factors;
            Rational mag = abs(c);
            if (!mag.is_one())
                factors.push_back(mag.str());
            if (!b.is_zero()) {
                if (b.is_one())
                    factors.push_back("r");
                else if (b.is_integer() && !b.is_negative())
                    factors.push_back("r^" + b.str());
                else
                    factors.push_back("r^(" + b.str() + ")");
            }
            std::string mono = detail::monomial_str(k.mono);
            if (!mono.empty())
                factors.push_back(mono);
            for (int q = 0; q < k.l; ++q)
                factors.push_back("log(r)");
            if (factors.empty())
                factors.push_back("1");
            std::string term;
            for (size_t i = 0; i < factors.size(); ++i)
                term += (i ? "*" : "") + factors[i];
            if (out.empty())
                out += c.is_negative() ? "-" : "";
            else
                out += c.is_negative() ? "-" : "+";
            out += term;
        }
        return out;
    }
};

} // namespace slcalc
