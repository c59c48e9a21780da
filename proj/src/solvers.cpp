#include "holomellin/solvers.hpp"

#include <algorithm>
#include <map>

#include "exact_linalg.hpp"
#include "holomellin/errors.hpp"

namespace holomellin {

namespace {

// Monic products of linear factors (n - root)^e over the rational roots of p,
// every exponent combination up to the degree cap. Always includes 1.
std::vector<Polynomial> monic_factor_candidates(const Polynomial& p, int max_degree) {
    std::vector<std::pair<Rational, int>> roots = rational_roots(p);
    std::vector<Polynomial> out{Polynomial::constant(p.var(), Rational(1))};
    for (const auto& [root, mult] : roots) {
        const Polynomial lin =
            Polynomial::variable(p.var()) - Polynomial::constant(p.var(), root);
        const size_t existing = out.size();
        Polynomial power = Polynomial::constant(p.var(), Rational(1));
        for (int e = 1; e <= mult; ++e) {
            power = power * lin;
            for (size_t i = 0; i < existing; ++i) {
                Polynomial cand = out[i] * power;
                if (cand.degree() <= max_degree) out.push_back(cand);
            }
        }
    }
    return out;
}

// Residual numerator of substituting ratio u/v into sum_i p_i(n) y(n+i),
// cleared by prod_{t=0}^{d-1} v(n+t).
Polynomial hyper_residual_numerator(const RecOp& rec, const RationalFunction& ratio) {
    const int d = rec.order();
    const Polynomial& u = ratio.num();
    const Polynomial& v = ratio.den();
    Polynomial res(Var::N);
    for (int i = 0; i <= d; ++i) {
        if (rec.coeff(i).is_zero()) continue;
        Polynomial term = rec.coeff(i);
        for (int t = 0; t < i; ++t) term = term * u.shifted(t);
        for (int t = i; t < d; ++t) term = term * v.shifted(t);
        res += term;
    }
    return res;
}

}  // namespace

CertificateCheck verify_certificate(const RecOp& rec, const HypergeometricCertificate& cert) {
    if (!rec.homogeneous()) throw DomainError("certificates apply to homogeneous recurrences");
    if (cert.ratio.is_zero()) throw DomainError("malformed certificate: zero ratio");
    Polynomial res = hyper_residual_numerator(rec, cert.ratio);
    Polynomial den = Polynomial::constant(Var::N, Rational(1));
    for (int t = 0; t < rec.order(); ++t) den = den * cert.ratio.den().shifted(t);
    return {res.is_zero(), RationalFunction(res, den)};
}

std::vector<HypergeometricCertificate> hyper_solutions(const RecOp& input, HyperOptions opts) {
    if (!input.homogeneous())
        throw DomainError("hypergeometric solving expects a homogeneous recurrence");
    const RecOp rec = normalize_recop(input);
    const int d = rec.order();
    if (d < 1) throw DomainError("hypergeometric solving needs order >= 1");

    // Candidates: a | p_0(n), b | p_d(n-d+1), both monic.
    std::vector<Polynomial> as = monic_factor_candidates(rec.coeff(0), opts.max_factor_degree);
    std::vector<Polynomial> bs =
        monic_factor_candidates(rec.coeff(d).shifted(-(d - 1)), opts.max_factor_degree);

    std::map<std::string, HypergeometricCertificate> found;
    for (const Polynomial& a : as) {
        for (const Polynomial& b : bs) {
            // q_i(n) = p_i(n) * prod_{t<i} a(n+t) * prod_{i<=t<d} b(n+t).
            std::vector<Polynomial> q(static_cast<size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) {
                Polynomial t = rec.coeff(i);
                for (int s = 0; s < i; ++s) t = t * a.shifted(s);
                for (int s = i; s < d; ++s) t = t * b.shifted(s);
                q[static_cast<size_t>(i)] = t;
            }
            int m = -1;
            for (const auto& qi : q) m = std::max(m, qi.degree());
            if (m < 0) continue;

            // z must be a nonzero root of the auxiliary leading-coefficient
            // polynomial sum_i [n^m]q_i z^i.
            std::vector<Rational> aux(static_cast<size_t>(d) + 1, Rational(0));
            for (int i = 0; i <= d; ++i) aux[static_cast<size_t>(i)] = q[static_cast<size_t>(i)].coeff(m);
            Polynomial aux_poly(Var::N, aux);
            if (aux_poly.is_zero()) continue;
            for (const auto& [z, mult] : rational_roots(aux_poly)) {
                if (z == 0) continue;

                // Monic polynomial part c of degree s: linear system on the
                // coefficients of sum_i z^i q_i(n) c(n+i) = 0.
                for (int s = 0; s <= opts.max_poly_degree; ++s) {
                    std::vector<Polynomial> basis_cols;
                    for (int t = 0; t <= s; ++t) {
                        Polynomial col(Var::N);
                        Rational zi(1);
                        for (int i = 0; i <= d; ++i) {
                            Polynomial shifted_monomial =
                                (Polynomial::variable(Var::N) +
                                 Polynomial::constant(Var::N, Rational(i)))
                                    .pow(t);
                            col += q[static_cast<size_t>(i)] * shifted_monomial * zi;
                            zi *= z;
                        }
                        basis_cols.push_back(col);
                    }
                    // All-zero columns mean the relation holds identically;
                    // the empty system below is then trivially consistent.
                    int maxdeg = -1;
                    for (const auto& col : basis_cols) maxdeg = std::max(maxdeg, col.degree());

                    detail::Matrix mat(static_cast<size_t>(maxdeg + 1),
                                       std::vector<Rational>(static_cast<size_t>(s), Rational(0)));
                    std::vector<Rational> rhs(static_cast<size_t>(maxdeg) + 1, Rational(0));
                    for (int row = 0; row <= maxdeg; ++row) {
                        for (int t = 0; t < s; ++t)
                            mat[static_cast<size_t>(row)][static_cast<size_t>(t)] =
                                basis_cols[static_cast<size_t>(t)].coeff(row);
                        rhs[static_cast<size_t>(row)] = -basis_cols[static_cast<size_t>(s)].coeff(row);
                    }
                    auto sols = detail::solve_affine(mat, rhs, static_cast<size_t>(s));
                    if (!sols) continue;

                    std::vector<std::vector<Rational>> candidates{sols->particular};
                    for (const auto& h : sols->homogeneous) {
                        std::vector<Rational> v = sols->particular;
                        for (size_t i = 0; i < v.size(); ++i) v[i] += h[i];
                        candidates.push_back(std::move(v));
                    }
                    for (const auto& gamma : candidates) {
                        std::vector<Rational> cc(gamma.begin(), gamma.end());
                        cc.push_back(Rational(1));  // monic
                        Polynomial c(Var::N, cc);
                        RationalFunction ratio =
                            RationalFunction(Polynomial::constant(Var::N, z) * a * c.shifted(1),
                                             b * c);
                        HypergeometricCertificate cert{ratio};
                        if (verify_certificate(rec, cert).ok)
                            found.emplace(ratio.str(), std::move(cert));
                    }
                }
            }
        }
    }

    std::vector<HypergeometricCertificate> out;
    out.reserve(found.size());
    for (auto& [key, cert] : found) out.push_back(std::move(cert));
    return out;
}

namespace {

// f^(j) = A_j / D^{j+1} with A_0 = N, A_{j+1} = A_j' D - (j+1) A_j D'.
std::vector<Polynomial> derivative_numerators(const Polynomial& num, const Polynomial& den,
                                              int order) {
    std::vector<Polynomial> a{num};
    const Polynomial dden = den.derivative();
    for (int j = 0; j < order; ++j)
        a.push_back(a.back().derivative() * den - a.back() * dden * Rational(j + 1));
    return a;
}

// Residual numerator of applying the ODE to num/den, cleared by den^{l+1}.
Polynomial ode_residual_numerator(const DiffOp& ode, const Polynomial& num,
                                  const Polynomial& den) {
    const int l = ode.order();
    std::vector<Polynomial> a = derivative_numerators(num, den, l);
    Polynomial res(Var::X);
    for (int j = 0; j <= l; ++j) {
        if (ode.coeff(j).is_zero()) continue;
        res += ode.coeff(j) * a[static_cast<size_t>(j)] * den.pow(l - j);
    }
    return res;
}

}  // namespace

CertificateCheck verify_certificate(const DiffOp& ode, const RationalFunction& candidate) {
    if (candidate.is_zero()) throw DomainError("malformed candidate: zero function");
    Polynomial res = ode_residual_numerator(ode, candidate.num(), candidate.den());
    return {res.is_zero(), RationalFunction(res, candidate.den().pow(ode.order() + 1))};
}

RationalSolutions rational_ode_solutions(const DiffOp& input, RationalOdeOptions opts) {
    const DiffOp ode = normalize_diffop(input);
    const int l = ode.order();

    // Fixed denominator with maximal admissible pole orders; any solution
    // with smaller exponents is a numerator multiple of it.
    Polynomial den = Polynomial::constant(Var::X, Rational(1));
    std::vector<Rational> pole_roots;
    for (const auto& [root, mult] : rational_roots(ode.coeff(l))) {
        pole_roots.push_back(root);
        den = den * (Polynomial::variable(Var::X) - Polynomial::constant(Var::X, root))
                        .pow(opts.max_pole_order);
    }
    const int num_degree = opts.extra_numerator_degree + den.degree();

    // One residual column per numerator monomial x^t.
    std::vector<std::vector<Polynomial>> a_cols;
    a_cols.reserve(static_cast<size_t>(num_degree) + 1);
    for (int t = 0; t <= num_degree; ++t)
        a_cols.push_back(derivative_numerators(Polynomial::monomial(Var::X, Rational(1), t), den, l));

    int max_row = -1;
    std::vector<Polynomial> residual_cols;
    for (int t = 0; t <= num_degree; ++t) {
        Polynomial res(Var::X);
        for (int j = 0; j <= l; ++j) {
            if (ode.coeff(j).is_zero()) continue;
            res += ode.coeff(j) * a_cols[static_cast<size_t>(t)][static_cast<size_t>(j)] *
                   den.pow(l - j);
        }
        residual_cols.push_back(res);
        max_row = std::max(max_row, res.degree());
    }

    detail::Matrix mat(static_cast<size_t>(max_row) + 1,
                       std::vector<Rational>(static_cast<size_t>(num_degree) + 1, Rational(0)));
    for (int t = 0; t <= num_degree; ++t)
        for (int row = 0; row <= residual_cols[static_cast<size_t>(t)].degree(); ++row)
            mat[static_cast<size_t>(row)][static_cast<size_t>(t)] =
                residual_cols[static_cast<size_t>(t)].coeff(row);

    RationalSolutions out;
    std::map<std::string, RationalFunction> found;
    bool pole_bound_hit = false, degree_bound_hit = false;
    for (const auto& v : detail::nullspace(mat, static_cast<size_t>(num_degree) + 1)) {
        Polynomial num(Var::X, std::vector<Rational>(v.begin(), v.end()));
        if (num.is_zero()) continue;
        RationalFunction f(num, den);
        f = f * RationalFunction::constant(Var::X, Rational(1) / f.num().leading());
        if (!verify_certificate(ode, f).ok)
            throw InvariantViolation("nullspace vector failed exact verification");
        if (f.num().degree() == num_degree) degree_bound_hit = true;
        for (const auto& [root, mult] : f.den().is_constant()
                                            ? std::vector<std::pair<Rational, int>>{}
                                            : rational_roots(f.den()))
            if (mult >= opts.max_pole_order) pole_bound_hit = true;
        found.emplace(f.str(), std::move(f));
    }
    for (auto& [key, f] : found) out.basis.push_back(std::move(f));
    if (pole_bound_hit)
        out.notes.push_back("pole-order bound " + std::to_string(opts.max_pole_order) +
                            " reached; rerun with a larger bound to rule out missed solutions");
    if (degree_bound_hit)
        out.notes.push_back("numerator degree bound " + std::to_string(num_degree) +
                            " reached; rerun with a larger bound to rule out missed solutions");
    return out;
}

}  // namespace holomellin
