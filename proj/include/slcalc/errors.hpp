#pragma once

/**
 * @file errors.hpp
 * @brief Structured error taxonomy shared by all modules.
 *
 * The CLI maps these onto exit codes: ParseError -> 2, DomainError (which
 * includes PoleError and WeightMismatchError) -> 3, InternalError -> 4.
 */

#include <stdexcept>
#include <string>

namespace slcalc {

/// Input outside an operation's mathematical domain (wrong integrality,
/// exceptional weight routed elsewhere, restriction of a singular field...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A section/field fed to an operator expecting a different conformal weight.
struct WeightMismatchError : DomainError {
    using DomainError::DomainError;
};

/// Formal series combined at incompatible truncation orders.  Loud by design:
/// silent truncation is the classic formal-series bug.
struct OrderMismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Syntax error with position information (0-based offset into the input).
struct ParseError : std::runtime_error {
    size_t line;
    size_t column;
    ParseError(const std::string& msg, size_t line_, size_t column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_)),
          line(line_), column(column_) {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace slcalc
