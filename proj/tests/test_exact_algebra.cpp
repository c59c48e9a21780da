#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holomellin/errors.hpp"
#include "holomellin/parser.hpp"
#include "holomellin/polynomial.hpp"
#include "holomellin/rational_function.hpp"

using namespace holomellin;

namespace {

Polynomial px(const std::string& s) { return parse_polynomial(s, Var::X); }
Polynomial pn(const std::string& s) { return parse_polynomial(s, Var::N); }

Polynomial random_poly(std::mt19937& rng, Var var, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& q : c) q = coeff(rng);
    return Polynomial(var, std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic on the worked examples") {
    CHECK(px("x+1") * px("x-1") == px("x^2-1"));
    CHECK((px("2-x-x^2") + px("x^2+x-2")).is_zero());
    CHECK(pn("n+1") * pn("n+2") == pn("n^2+3*n+2"));
    CHECK_THROWS_AS(px("x") + pn("n"), DomainError);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = random_poly(rng, Var::N, 5);
        Polynomial b = random_poly(rng, Var::N, 5);
        Polynomial c = random_poly(rng, Var::N, 3);
        CHECK(((a + b) - b) == a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("gcd examples and divisibility") {
    CHECK(poly_gcd(px("x^2-1"), px("x-1")) == px("x-1"));
    CHECK(poly_gcd(px("x"), px("x+1")) == px("1"));
    CHECK(poly_gcd(px("2*x+2"), px("4*x+4")) == px("x+1"));
    CHECK_THROWS_AS(poly_gcd(Polynomial(Var::X), Polynomial(Var::X)), DomainError);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial a = random_poly(rng, Var::N, 4);
        Polynomial b = random_poly(rng, Var::N, 4);
        if (a.is_zero() && b.is_zero()) continue;
        Polynomial g = poly_gcd(a, b);
        if (!a.is_zero()) CHECK(divmod(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(divmod(b, g).second.is_zero());
    }
}

TEST_CASE("shift examples and inverse property") {
    CHECK(pn("n^2").shifted(1) == pn("n^2+2*n+1"));
    CHECK(pn("n+3").shifted(-3) == pn("n"));
    CHECK(pn("5").shifted(7) == pn("5"));
    CHECK_THROWS_AS(px("x").shifted(1), DomainError);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = random_poly(rng, Var::N, 5);
        long k = std::uniform_int_distribution<long>(-8, 8)(rng);
        CHECK(p.shifted(k).shifted(-k) == p);
    }
}

TEST_CASE("falling factorial examples") {
    CHECK(falling_factorial(3, 2) == pn("n^2+5*n+6"));
    CHECK(falling_factorial(0, 0) == pn("1"));
    CHECK(falling_factorial(1, 3) == pn("n^3-n"));
    CHECK_THROWS_AS(falling_factorial(0, -1), DomainError);
}

TEST_CASE("falling factorial agrees with big-integer factorial quotients") {
    // (n+m)!/(n+m-p)! for n >= p-m >= 0, checked against direct factorials.
    auto factorial = [](long v) {
        BigInt r(1);
        for (long i = 2; i <= v; ++i) r *= i;
        return r;
    };
    for (long m = 0; m <= 6; ++m)
        for (long p = 0; p <= 6; ++p)
            for (long n = std::max<long>(0, p - m); n <= 20; ++n) {
                Rational expected(factorial(n + m), factorial(n + m - p));
                CHECK(falling_factorial(m, p)(Rational(n)) == expected);
            }
}

TEST_CASE("rational roots") {
    auto roots = rational_roots(px("x-x^3"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == std::pair<Rational, int>(Rational(-1), 1));
    CHECK(roots[1] == std::pair<Rational, int>(Rational(0), 1));
    CHECK(roots[2] == std::pair<Rational, int>(Rational(1), 1));

    CHECK(rational_roots(px("x^2+1")).empty());

    auto dbl = rational_roots(px("(2+x)^2"));
    REQUIRE(dbl.size() == 1);
    CHECK(dbl[0] == std::pair<Rational, int>(Rational(-2), 2));

    auto frac = rational_roots(pn("2*n-1"));
    REQUIRE(frac.size() == 1);
    CHECK(frac[0].first == Rational(1, 2));

    CHECK_THROWS_AS(rational_roots(Polynomial(Var::X)), DomainError);
}

TEST_CASE("rational function normalization") {
    RationalFunction f(px("2*x+2"), px("4*x^2-4"));
    CHECK(f.num() == px("1/2"));
    CHECK(f.den() == px("x-1"));

    CHECK_THROWS_AS(RationalFunction(px("1"), Polynomial(Var::X)), DomainError);

    RationalFunction zero(px("0"), px("x"));
    CHECK(zero.is_zero());
    CHECK(zero.den() == px("1"));

    RationalFunction sum = RationalFunction(px("1"), px("x+1")) +
                           RationalFunction(px("1"), px("x-1"));
    CHECK(sum == RationalFunction(px("2*x"), px("x^2-1")));
}

TEST_CASE("taylor coefficients of rational functions") {
    RationalFunction f(px("1"), px("1+x"));
    auto c = taylor_coefficients(f, 5);
    for (int k = 0; k <= 5; ++k) CHECK(c[static_cast<size_t>(k)] == Rational(k % 2 == 0 ? 1 : -1));
    CHECK_THROWS_AS(taylor_coefficients(RationalFunction(px("1"), px("x")), 3), DomainError);
}

TEST_CASE("scalar content") {
    CHECK(scalar_content(pn("2*n+4")) == Rational(2));
    CHECK(scalar_content(pn("1/2*n+1/4")) == Rational(1, 4));
    CHECK(scalar_content(pn("-3")) == Rational(3));
}
