#pragma once

#include <string>
#include <vector>

#include "holomellin/polynomial.hpp"

namespace holomellin {

// Normalized quotient of two polynomials: gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    explicit RationalFunction(Var v = Var::N)
        : num_(Polynomial(v)), den_(Polynomial::constant(v, Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction from_poly(const Polynomial& p) {
        return RationalFunction(p, Polynomial::constant(p.var(), Rational(1)));
    }
    static RationalFunction constant(Var v, const Rational& q) {
        return from_poly(Polynomial::constant(v, q));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    Var var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    // p(n) -> p(n+k) on both parts.
    RationalFunction shifted(long k) const { return {num_.shifted(k), den_.shifted(k)}; }

    // "num" or "(num)/(den)".
    std::string str() const;

private:
    Polynomial num_, den_;
};

// Power-series coefficients c_0..c_k of num/den around 0; requires den(0) != 0.
std::vector<Rational> taylor_coefficients(const RationalFunction& f, int k);

}  // namespace holomellin
