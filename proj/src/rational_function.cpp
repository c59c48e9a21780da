#include "holomellin/rational_function.hpp"

#include "holomellin/errors.hpp"

namespace holomellin {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.var() != den_.var()) throw DomainError("variable tag mismatch in rational function");
    if (den_.is_zero()) throw DomainError("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.var(), Rational(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rational lc = den_.leading();
    num_ = num_ / lc;
    den_ = den_ / lc;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DomainError("division by zero rational function");
    return {num_ * o.den_, den_ * o.num_};
}

std::string RationalFunction::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::vector<Rational> taylor_coefficients(const RationalFunction& f, int k) {
    if (k < 0) throw DomainError("negative expansion order");
    const Polynomial& num = f.num();
    const Polynomial& den = f.den();
    Rational b0 = den.coeff(0);
    if (b0 == 0) throw DomainError("pole at 0: no power-series expansion");
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    for (int i = 0; i <= k; ++i) {
        Rational acc = num.coeff(i);
        for (int j = 1; j <= std::min(i, den.degree()); ++j)
            acc -= den.coeff(j) * c[static_cast<size_t>(i - j)];
        c[static_cast<size_t>(i)] = acc / b0;
    }
    return c;
}

}  // namespace holomellin
