#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "holomellin/errors.hpp"
#include "holomellin/parser.hpp"
#include "holomellin/series_oracle.hpp"
#include "holomellin/solvers.hpp"
#include "paper_vectors.hpp"

using namespace holomellin;

namespace {

Polynomial px(const std::string& s) { return parse_polynomial(s, Var::X); }
Polynomial pn(const std::string& s) { return parse_polynomial(s, Var::N); }

bool contains_ratio(const std::vector<HypergeometricCertificate>& certs,
                    const RationalFunction& ratio) {
    for (const auto& c : certs)
        if (c.ratio == ratio) return true;
    return false;
}

bool contains_solution(const RationalSolutions& sols, const RationalFunction& f) {
    for (const auto& s : sols.basis)
        if (s == f) return true;
    return false;
}

RationalFunction rf(const std::string& num, const std::string& den, Var v) {
    return RationalFunction(parse_polynomial(num, v), parse_polynomial(den, v));
}

}  // namespace

TEST_CASE("hypergeometric solutions of the worked recurrences") {
    auto certs = hyper_solutions(vectors::rec_order2());
    CHECK(contains_ratio(certs, RationalFunction::constant(Var::N, Rational(1))));

    auto hcerts = hyper_solutions(vectors::rec_h());
    CHECK(contains_ratio(hcerts, RationalFunction::constant(Var::N, Rational(-1))));

    RecOp factorial = parse_operator("S - (n+1)", OperatorKind::Rec).rec();
    auto fcerts = hyper_solutions(factorial);
    REQUIRE(fcerts.size() == 1);
    CHECK(fcerts[0].ratio == RationalFunction::from_poly(pn("n+1")));
}

TEST_CASE("every returned certificate verifies symbolically") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 2), order(1, 3);
    int total_certs = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> coeffs;
        const int d = order(rng);
        for (int i = 0; i <= d; ++i) {
            std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
            for (auto& q : c) q = coeff(rng);
            coeffs.emplace_back(Var::N, std::move(c));
        }
        bool lead_zero = coeffs.back().is_zero() || coeffs.front().is_zero();
        if (lead_zero) continue;
        RecOp rec(std::move(coeffs));
        auto certs = hyper_solutions(rec, {2, 4});
        for (const auto& cert : certs) {
            CHECK(verify_certificate(normalize_recop(rec), cert).ok);
            ++total_certs;
        }
    }
    CHECK(total_certs >= 3);
}

TEST_CASE("planted first-order solutions are recovered") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational z(small(rng) == 0 ? 2 : small(rng));
        const Rational a(small(rng)), b(small(rng));
        // (n+b) y_{n+1} - z (n+a) y_n annihilates the term with ratio
        // z (n+a)/(n+b).
        Polynomial p1 = pn("n") + Polynomial::constant(Var::N, b);
        Polynomial p0 = (pn("n") + Polynomial::constant(Var::N, a)) * (-z);
        if (p0.is_zero() || p1.is_zero()) continue;
        RecOp rec({p0, p1});
        RationalFunction expected(
            (pn("n") + Polynomial::constant(Var::N, a)) * z,
            pn("n") + Polynomial::constant(Var::N, b));
        CHECK(contains_ratio(hyper_solutions(rec), expected));
    }
}

TEST_CASE("scalar invariance of the certificate set") {
    RecOp rec = vectors::rec_order2();
    std::vector<Polynomial> scaled;
    for (int i = 0; i <= rec.order(); ++i) scaled.push_back(rec.coeff(i) * Rational(7, 3));
    auto a = hyper_solutions(rec);
    auto b = hyper_solutions(RecOp(std::move(scaled)));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].ratio == b[i].ratio);
}

TEST_CASE("certificate verification reports residuals") {
    RecOp rec = vectors::rec_order2();
    CertificateCheck good =
        verify_certificate(rec, {RationalFunction::constant(Var::N, Rational(1))});
    CHECK(good.ok);
    CHECK(good.residual.is_zero());

    CertificateCheck bad =
        verify_certificate(rec, {RationalFunction::constant(Var::N, Rational(2))});
    CHECK_FALSE(bad.ok);
    CHECK(bad.residual == RationalFunction::from_poly(pn("3*n+5")));

    CHECK_THROWS_AS(verify_certificate(rec, {RationalFunction(Var::N)}), DomainError);
}

TEST_CASE("rational solutions of the worked differential equations") {
    auto h = rational_ode_solutions(vectors::ode_h());
    CHECK(contains_solution(h, rf("1", "1+x", Var::X)));

    auto g = rational_ode_solutions(vectors::ode_g());
    CHECK(contains_solution(g, rf("1", "2+x", Var::X)));

    // Solutions are scaled to a monic numerator: 1/(1-x) appears as its
    // scalar multiple 1/(x-1).
    auto geo = rational_ode_solutions(vectors::ode_order2());
    CHECK(contains_solution(geo, rf("1", "x-1", Var::X)));

    // Third-order equation: only the 1/(1+x) line is rational.
    auto third = rational_ode_solutions(vectors::ode_order3());
    REQUIRE(third.basis.size() == 1);
    CHECK(third.basis[0] == rf("1", "1+x", Var::X));
}

TEST_CASE("ode certificate verification") {
    CHECK(verify_certificate(vectors::ode_h(), rf("1", "1+x", Var::X)).ok);
    CHECK_FALSE(verify_certificate(vectors::ode_h(), rf("1", "2+x", Var::X)).ok);
    CHECK(verify_certificate(vectors::ode_g(), rf("1", "2+x", Var::X)).ok);
    CHECK_THROWS_AS(verify_certificate(vectors::ode_h(), RationalFunction(Var::X)), DomainError);
}

TEST_CASE("polynomial solutions come out despite the pole machinery") {
    // x f' - 2 f = 0: solution x^2.
    DiffOp ode({px("-2"), px("x")});
    auto sols = rational_ode_solutions(ode);
    REQUIRE(sols.basis.size() == 1);
    CHECK(sols.basis[0] == RationalFunction::from_poly(px("x^2")));
}

TEST_CASE("empty results are not errors") {
    // f' = f has no rational solution; S - 2... has ratio 2 though, so use a
    // recurrence with no hypergeometric solution over the rationals:
    // y_{n+2} = -y_n (ratio would need i).
    DiffOp exp_ode({px("-1"), px("1")});
    CHECK(rational_ode_solutions(exp_ode).basis.empty());

    RecOp rot({pn("1"), pn("0"), pn("1")});
    CHECK(hyper_solutions(rot).empty());
}

TEST_CASE("cross-oracle agreement: solver output matches series expansion") {
    auto sols = rational_ode_solutions(vectors::ode_g());
    REQUIRE_FALSE(sols.basis.empty());
    for (const auto& f : sols.basis) {
        if (f.den()(Rational(0)) == 0) continue;
        auto taylor = taylor_coefficients(f, 19);
        std::vector<Rational> init(taylor.begin(), taylor.begin() + 6);
        SeriesExpansion s = expand(vectors::ode_g(), init, 19, true);
        for (size_t k = 0; k < 20; ++k) CHECK(s.exact_coeffs[k] == taylor[k]);
    }
}

TEST_CASE("solver preconditions") {
    InhomPart inhom;
    inhom.add(BoundarySymbol::deriv_at_one(0), pn("1"));
    RecOp bad({pn("1"), pn("1")}, inhom);
    CHECK_THROWS_AS(hyper_solutions(bad), DomainError);

    RecOp order0({pn("n+1")});
    CHECK_THROWS_AS(hyper_solutions(order0), DomainError);
}
