#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holomellin/rational.hpp"

namespace holomellin {

// Variable tag. Operator coefficients live either in K[x] (differential side)
// or K[n] (recurrence side); mixing tags is always a bug and throws.
enum class Var { X, N };

inline const char* var_name(Var v) { return v == Var::X ? "x" : "n"; }

// Dense univariate polynomial over the exact rationals. The coefficient list
// is indexed by exponent and trimmed: the last entry is nonzero unless the
// polynomial is zero (empty list).
class Polynomial {
public:
    explicit Polynomial(Var v = Var::N) : var_(v) {}
    Polynomial(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Var v, const Rational& value);
    static Polynomial variable(Var v);                              // x or n
    static Polynomial monomial(Var v, const Rational& coeff, int exponent);

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of var^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial operator*(const Rational& s) const;
    Polynomial operator/(const Rational& s) const;
    bool operator==(const Polynomial& other) const { return var_ == other.var_ && c_ == other.c_; }

    Polynomial derivative() const;
    // p(n+k), exact. Only meaningful for the recurrence variable.
    Polynomial shifted(long k) const;
    Polynomial pow(int e) const;

    Rational operator()(const Rational& at) const;
    double eval_double(double at) const;

    // Canonical text form: ascending exponents, exact rational coefficients,
    // e.g. "-3 + x", "n + 1/2*n^2". Zero prints as "0".
    std::string str() const;

private:
    void trim();
    void require_same_var(const Polynomial& other) const;

    Var var_;
    std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

// Euclidean division: returns {quotient, remainder} with deg(r) < deg(b).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Division that must be exact; throws InvariantViolation on a nonzero remainder.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor. Errors if both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// (n + n_offset)(n + n_offset - 1)...(n + n_offset - length + 1), a polynomial
// in n of degree `length`; 1 for length = 0.
Polynomial falling_factorial(long n_offset, long length);

// Exact rational roots with multiplicities, via integer divisor candidates on
// the primitive part. Pairs are sorted by root value.
std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p);

// Rational c > 0 such that p/c has coprime integer coefficients. p must be nonzero.
Rational scalar_content(const Polynomial& p);

}  // namespace holomellin
