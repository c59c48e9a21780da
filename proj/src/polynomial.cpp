#include "holomellin/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "holomellin/errors.hpp"

namespace holomellin {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::constant(Var v, const Rational& value) {
    Polynomial p(v);
    if (value != 0) p.c_.push_back(value);
    return p;
}

Polynomial Polynomial::variable(Var v) { return monomial(v, Rational(1), 1); }

Polynomial Polynomial::monomial(Var v, const Rational& coeff, int exponent) {
    if (exponent < 0) throw DomainError("negative exponent in monomial");
    Polynomial p(v);
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(exponent) + 1, Rational(0));
        p.c_.back() = coeff;
    }
    return p;
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Polynomial::require_same_var(const Polynomial& other) const {
    if (var_ != other.var_)
        throw DomainError(std::string("variable tag mismatch: ") + var_name(var_) + " vs " +
                          var_name(other.var_));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(var_);
    r.c_.reserve(c_.size());
    for (const auto& q : c_) r.c_.push_back(-q);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_var(other);
    Polynomial r(var_);
    r.c_.resize(std::max(c_.size(), other.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < other.c_.size(); ++i) r.c_[i] += other.c_[i];
    r.trim();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_var(other);
    if (c_.empty() || other.c_.empty()) return Polynomial(var_);
    Polynomial r(var_);
    r.c_.assign(c_.size() + other.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < other.c_.size(); ++j) r.c_[i + j] += c_[i] * other.c_[j];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial r(var_);
    if (s == 0) return r;
    r.c_.reserve(c_.size());
    for (const auto& q : c_) r.c_.push_back(q * s);
    return r;
}

Polynomial Polynomial::operator/(const Rational& s) const {
    if (s == 0) throw DomainError("division by zero scalar");
    return *this * (Rational(1) / s);
}

Polynomial Polynomial::derivative() const {
    Polynomial r(var_);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational(i));
    r.trim();
    return r;
}

Polynomial Polynomial::shifted(long k) const {
    if (var_ != Var::N) throw DomainError("shift applies to polynomials in n");
    if (k == 0 || c_.empty()) return *this;
    // Horner: p(n+k) built from the leading coefficient down.
    Polynomial base = variable(Var::N) + constant(Var::N, Rational(k));
    Polynomial r = constant(Var::N, c_.back());
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i)
        r = r * base + constant(Var::N, c_[static_cast<size_t>(i)]);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    Polynomial r = constant(var_, Rational(1));
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rational Polynomial::operator()(const Rational& at) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * at + c_[i];
    return r;
}

double Polynomial::eval_double(double at) const {
    double r = 0.0;
    for (size_t i = c_.size(); i-- > 0;) r = r * at + to_double(c_[i]);
    return r;
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rational& q = c_[k];
        if (q == 0) continue;
        const bool neg = q < 0;
        Rational mag = neg ? Rational(-q) : q;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (k == 0) {
            out << to_string(mag);
        } else {
            if (mag != 1) out << to_string(mag) << "*";
            out << var_name(var_);
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (a.var() != b.var()) throw DomainError("variable tag mismatch in division");
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Polynomial q(a.var());
    Polynomial r = a;
    const int db = b.degree();
    const Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        const int k = r.degree() - db;
        const Rational f = r.leading() / lb;
        Polynomial t = Polynomial::monomial(a.var(), f, k);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvariantViolation("expected exact polynomial division");
    return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.var() != b.var()) throw DomainError("variable tag mismatch in gcd");
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    Polynomial u = a, v = b;
    while (!v.is_zero()) {
        Polynomial rem = divmod(u, v).second;
        u = v;
        v = rem;
    }
    return u / u.leading();
}

Polynomial falling_factorial(long n_offset, long length) {
    if (length < 0) throw DomainError("negative falling-factorial length");
    Polynomial r = Polynomial::constant(Var::N, Rational(1));
    for (long t = 0; t < length; ++t)
        r = r * (Polynomial::variable(Var::N) + Polynomial::constant(Var::N, Rational(n_offset - t)));
    return r;
}

Rational scalar_content(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("scalar content of the zero polynomial");
    BigInt den_lcm(1), num_gcd(0);
    for (const auto& q : p.coeffs()) {
        if (q == 0) continue;
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(q));
    }
    for (const auto& q : p.coeffs()) {
        if (q == 0) continue;
        BigInt scaled = numerator(q) * (den_lcm / denominator(q));
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(scaled));
    }
    return Rational(num_gcd, den_lcm);
}

namespace {

// Divisors of |v|, by trial division. Desk-scale inputs only.
std::vector<BigInt> divisors(const BigInt& v) {
    BigInt n = boost::multiprecision::abs(v);
    if (n > BigInt("1000000000000"))
        throw DomainError("coefficient too large for rational-root search");
    std::vector<BigInt> ds;
    for (BigInt d(1); d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d * d != n) ds.push_back(n / d);
        }
    }
    return ds;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    std::vector<std::pair<Rational, int>> roots;

    // Integer primitive part.
    Polynomial q = p / scalar_content(p);

    // Strip the power of the variable first: root 0.
    int zero_mult = 0;
    while (!q.is_zero() && q.coeff(0) == 0) {
        q = divide_exact(q, Polynomial::variable(p.var()));
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
    if (q.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    BigInt a0 = numerator(q.coeff(0));
    BigInt ad = numerator(q.leading());
    std::vector<Rational> candidates;
    for (const BigInt& num : divisors(a0))
        for (const BigInt& den : divisors(ad)) {
            candidates.emplace_back(Rational(num, den));
            candidates.emplace_back(Rational(-num, den));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& r : candidates) {
        int mult = 0;
        while (q.degree() >= 1 && q(r) == 0) {
            Polynomial lin = Polynomial::variable(p.var()) - Polynomial::constant(p.var(), r);
            q = divide_exact(q, lin);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace holomellin
