#pragma once

#include <stdexcept>
#include <string>

namespace holomellin {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input values: mismatched variable tags, zero operators, bad ranges.
struct DomainError : Error {
    using Error::Error;
};

// Syntax errors carry a 1-based position into the source text.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// Series unrolling hit a root of the leading recurrence coefficient that is
// not covered by the supplied initial coefficients.
struct SingularIndexError : Error {
    long long index;
    explicit SingularIndexError(long long idx)
        : Error("singular index " + std::to_string(idx) +
                ": leading recurrence coefficient vanishes and no initial "
                "coefficient was supplied"),
          index(idx) {}
};

// An internal algebraic identity failed to hold. Never silent.
struct InvariantViolation : Error {
    using Error::Error;
};

// Structurally valid input outside the supported problem class.
struct UnsupportedInput : Error {
    using Error::Error;
};

}  // namespace holomellin
