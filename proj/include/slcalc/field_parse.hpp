#pragma once

/**
 * @file field_parse.hpp
 * @brief Recursive-descent parser for the shared field-expression grammar:
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ['^' integer]
 *   atom   := rational | 'r' | 'x1'..'x9' | 'log(r)' | '(' expr ')' | '-' factor
 *
 * Rationals are "p" or "p/q".  Exponents are nonnegative integers only;
 * fractional leading exponents of r enter solutions through solver prefactors,
 * never through this grammar.  Errors carry line/column positions.
 */

#include "density_field.hpp"

#include <cctype>
#include <string>

namespace slcalc {

namespace detail {

class FieldParser {
    const std::string& s_;
    size_t pos_ = 0;
    int n_;
    std::vector<int> sig_;

    [[noreturn]] void err(const std::string& msg) const {
        size_t line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    DensityField unit() const { return DensityField::constant(Rational(1), Rational(0), n_, sig_); }

    BigInt parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start)
            err("expected integer");
        return BigInt(s_.substr(start, pos_ - start));
    }

    Rational parse_rational() {
        BigInt num = parse_integer();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            BigInt den = parse_integer();
            if (den == 0)
                err("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    long long parse_exponent() {
        skip_ws();
        size_t at = pos_;
        if (eat('(')) {
            // reject fractional powers explicitly, with a precise message
            pos_ = at;
            err("fractional or parenthesized exponents are not allowed; "
                "exponents must be nonnegative integers");
        }
        if (peek() == '-')
            err("negative exponents are not allowed");
        BigInt e = parse_integer();
        if (pos_ < s_.size() && s_[pos_] == '/')
            err("fractional exponents are not allowed");
        return static_cast<long long>(e);
    }

    DensityField parse_atom() {
        skip_ws();
        if (pos_ >= s_.size())
            err("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            DensityField f = parse_expr();
            if (!eat(')'))
                err("expected ')'");
            return f;
        }
        if (c == '-') {
            ++pos_;
            return parse_factor().scaled(Rational(-1));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return unit().scaled(parse_rational());
        if (s_.compare(pos_, 4, "log(") == 0) {
            pos_ += 4;
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != 'r')
                err("only log(r) is supported");
            ++pos_;
            if (!eat(')'))
                err("expected ')' after log(r");
            return unit().times_logr();
        }
        if (c == 'r') {
            ++pos_;
            DensityField f = unit();
            f = f.times_r_pow(Rational(1), Rational(0));
            return f;
        }
        if (c == 'x' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            int idx = s_[pos_ + 1] - '0';
            if (idx < 1 || idx > 9)
                err("boundary variables are x1..x9");
            if (idx > n_)
                err("variable x" + std::to_string(idx) + " exceeds boundary dimension n=" +
                    std::to_string(n_));
            pos_ += 2;
            DensityField f(Rational(0), n_, sig_);
            std::vector<int> mono(static_cast<size_t>(n_), 0);
            mono[static_cast<size_t>(idx - 1)] = 1;
            f.add_term(0, 0, mono, Rational(1));
            return f;
        }
        err(std::string("unexpected character '") + c + "'");
    }

    DensityField parse_factor() {
        DensityField base = parse_atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            long long e = parse_exponent();
            DensityField acc = unit();
            for (long long i = 0; i < e; ++i)
                acc = acc * base;
            return acc;
        }
        return base;
    }

    DensityField parse_term() {
        DensityField f = parse_factor();
        while (eat('*'))
            f = f * parse_factor();
        return f;
    }

    DensityField parse_expr() {
        DensityField f = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                f = f + parse_term();
            } else if (c == '-') {
                ++pos_;
                f = f - parse_term();
            } else {
                break;
            }
        }
        return f;
    }

public:
    FieldParser(const std::string& s, int n, std::vector<int> sig)
        : s_(s), n_(n), sig_(std::move(sig)) {
        if (sig_.empty())
            sig_.assign(static_cast<size_t>(n), 1);
    }

    DensityField parse() {
        DensityField f = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            err("trailing input");
        return f;
    }
};

} // namespace detail

/// Parse a field expression over n boundary coordinates; the result carries
/// weight 0 (callers retag via set_weight, weights are not part of the text).
inline DensityField parse_field_expr(const std::string& text, int n, std::vector<int> sig = {}) {
    return detail::FieldParser(text, n, std::move(sig)).parse();
}

} // namespace slcalc
