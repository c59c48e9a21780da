#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "holomellin/errors.hpp"

namespace holomellin {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar over arbitrary-precision integers. cpp_rational keeps
// the canonical form we rely on everywhere: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational rational_from_string(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw DomainError("not a rational number: '" + text + "'");
    }
}

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace holomellin
