#pragma once

/**
 * @file word_parse.hpp
 * @brief Textual grammar for operator words and for target weights.
 *
 * Word grammar (juxtaposition = composition, leftmost factor acts last):
 *   generators: "x", "y", "h", "logx", "logtau", "x^(h0-1)"
 *   named blocks: "K[h0]" (also plain "K"), "G", "F", "HH", "O", "Obar"
 *
 * Weight grammar: linear expressions in h0 with rational coefficients,
 * e.g. "h0", "2-h0", "h0-2", "-1/4", "2*h0+3".
 */

#include "sl2.hpp"

#include <cctype>
#include <string>

namespace slcalc {

namespace detail {

class WeightExprParser {
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void err(const std::string& msg) const {
        throw ParseError("weight expression: " + msg, 1, pos_ + 1);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Rational parse_rational() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start)
            err("expected number");
        BigInt num(s_.substr(start, pos_ - start));
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            size_t ds = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ == ds)
                err("expected denominator");
            BigInt den(s_.substr(ds, pos_ - ds));
            if (den == 0)
                err("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // term := ['-'] (rational ['*' h0] | h0 ['*' rational])
    RatFunc parse_term(bool negated) {
        RatFunc t;
        if (s_.compare(pos_, 2, "h0") == 0) {
            pos_ += 2;
            t = RatFunc::h0();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                t = t * RatFunc(parse_rational());
            }
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t = RatFunc(parse_rational());
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (s_.compare(pos_, 2, "h0") != 0)
                    err("expected h0 after '*'");
                pos_ += 2;
                t = t * RatFunc::h0();
            }
        } else {
            err("expected rational or h0");
        }
        return negated ? RatFunc(0) - t : t;
    }

public:
    explicit WeightExprParser(const std::string& s) : s_(s) {}

    RatFunc parse() {
        bool neg = false;
        char c = peek();
        if (c == '-' || c == '+') {
            neg = (c == '-');
            ++pos_;
            skip_ws();
        }
        RatFunc acc = parse_term(neg);
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                skip_ws();
                acc = acc + parse_term(c == '-');
            } else {
                break;
            }
        }
        skip_ws();
        if (pos_ != s_.size())
            err("trailing input");
        return acc;
    }
};

} // namespace detail

/// Parse a target weight: a linear expression in h0 over the rationals.
inline RatFunc parse_weight_expr(const std::string& text) {
    return detail::WeightExprParser(text).parse();
}

namespace detail {

class WordParser {
    const std::string& s_;
    size_t pos_ = 0;
    const WeightParam& h0_;
    int order_;
    const Sl2Engine& eng_;

    [[noreturn]] void err(const std::string& msg) const {
        throw ParseError("operator word: " + msg, 1, pos_ + 1);
    }
    void skip_ws() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '*'))
            ++pos_;
    }
    bool try_eat(const std::string& tok) {
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    long long integer_h0() const {
        if (h0_.is_generic() || !h0_.value->is_integer())
            err("this block requires an integer specialized h0 (use --h0)");
        return h0_.as_small_int();
    }

    static OpExpr compose(OpExpr a, const OpExpr& b) {
        OpExpr out;
        for (const auto& [ca, wa] : a.parts)
            for (const auto& [cb, wb] : b.parts) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out.add(ca * cb, std::move(w));
            }
        return out;
    }

    static OpExpr single(OpFactor f) {
        OpExpr e;
        e.add(RatFunc(1), {std::move(f)});
        return e;
    }

    OpExpr parse_token() {
        // longest-match on named blocks first
        if (try_eat("x^(h0-1)"))
            return single(OpFactor::x_pow(XExp{Rational(0), 1}));
        if (try_eat("logx"))
            return single(OpFactor::plain(Gen::LogX));
        if (try_eat("logtau"))
            return single(OpFactor::plain(Gen::LogTau));
        if (try_eat("Obar")) {
            long long v = integer_h0();
            if (v != 1)
                err("Obar is the h0 = 1 operator");
            return solution_op_expr(eng_, assemble_log_operator(1, order_));
        }
        if (try_eat("O")) {
            long long v = integer_h0();
            if (v < 2)
                err("O requires integer h0 >= 2");
            return solution_op_expr(eng_, assemble_log_operator(v, order_));
        }
        if (try_eat("K[h0]") || try_eat("K"))
            return single(OpFactor::normal_series(k_series(h0_, order_)));
        if (try_eat("G"))
            return single(OpFactor::normal_series(g_series(h0_, order_)));
        if (try_eat("F"))
            return single(OpFactor::normal_series(f_polynomial(integer_h0())));
        if (try_eat("HH"))
            return single(OpFactor::normal_series(h_series(h0_, order_)));
        if (try_eat("x"))
            return single(OpFactor::plain(Gen::X));
        if (try_eat("y"))
            return single(OpFactor::plain(Gen::Y));
        if (try_eat("h"))
            return single(OpFactor::plain(Gen::H));
        err(std::string("unknown token at '") + s_.substr(pos_, 8) + "'");
    }

public:
    WordParser(const std::string& s, const Sl2Engine& eng, const WeightParam& h0, int order)
        : s_(s), h0_(h0), order_(order), eng_(eng) {}

    OpExpr parse() {
        OpExpr acc;
        acc.add(RatFunc(1), {});
        skip_ws();
        if (pos_ == s_.size())
            err("empty word");
        while (pos_ < s_.size()) {
            acc = compose(std::move(acc), parse_token());
            skip_ws();
        }
        return acc;
    }
};

} // namespace detail

/// Parse an operator word/expression against the engine's weight setting.
/// `order` bounds all embedded series blocks.
inline OpExpr parse_operator_expr(const std::string& text, const Sl2Engine& eng,
                                  const WeightParam& h0, int order) {
    return detail::WordParser(text, eng, h0, order).parse();
}

} // namespace slcalc
