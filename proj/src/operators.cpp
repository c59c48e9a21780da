#include "holomellin/operators.hpp"

#include <algorithm>

#include "holomellin/errors.hpp"

namespace holomellin {

BoundarySymbol BoundarySymbol::deriv_at_one(int j) {
    if (j < 0) throw DomainError("negative derivative order in boundary symbol");
    return {Kind::DerivAtOne, j};
}

BoundarySymbol BoundarySymbol::mellin_moment(int n0) {
    if (n0 < 0) throw DomainError("negative index in Mellin moment symbol");
    return {Kind::MellinMoment, n0};
}

std::string BoundarySymbol::str() const {
    if (kind == Kind::DerivAtOne) return "f^(" + std::to_string(index) + ")(1)";
    return "M(" + std::to_string(index) + ")";
}

BoundarySymbol BoundarySymbol::parse(const std::string& text) {
    int j = -1;
    if (std::sscanf(text.c_str(), "f^(%d)(1)", &j) == 1) return deriv_at_one(j);
    if (std::sscanf(text.c_str(), "M(%d)", &j) == 1) return mellin_moment(j);
    throw DomainError("unknown boundary symbol '" + text + "'");
}

void InhomPart::add(const BoundarySymbol& sym, const Polynomial& coeff) {
    if (coeff.var() != Var::N) throw DomainError("inhomogeneous coefficients live in K[n]");
    auto it = terms_.find(sym);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(sym, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

InhomPart InhomPart::operator+(const InhomPart& o) const {
    InhomPart r = *this;
    for (const auto& [sym, c] : o.terms_) r.add(sym, c);
    return r;
}

InhomPart InhomPart::scaled(const Rational& s) const {
    InhomPart r;
    if (s == 0) return r;
    for (const auto& [sym, c] : terms_) r.terms_.emplace(sym, c * s);
    return r;
}

InhomPart InhomPart::shifted(long k) const {
    InhomPart r;
    for (const auto& [sym, c] : terms_) r.terms_.emplace(sym, c.shifted(k));
    return r;
}

namespace {

void check_vars(const std::vector<Polynomial>& coeffs, Var v, const char* what) {
    for (const auto& p : coeffs)
        if (p.var() != v)
            throw DomainError(std::string(what) + " coefficients must be polynomials in " +
                              var_name(v));
}

void trim_leading(std::vector<Polynomial>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

DiffOp::DiffOp(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    check_vars(coeffs_, Var::X, "differential operator");
    trim_leading(coeffs_);
    if (coeffs_.empty()) throw DomainError("zero differential operator");
}

const Polynomial& DiffOp::coeff(int i) const {
    static const Polynomial zero(Var::X);
    if (i < 0 || i > order()) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

RecOp::RecOp(std::vector<Polynomial> coeffs, InhomPart inhom)
    : coeffs_(std::move(coeffs)), inhom_(std::move(inhom)) {
    check_vars(coeffs_, Var::N, "recurrence operator");
    trim_leading(coeffs_);
    if (coeffs_.empty()) throw DomainError("zero recurrence operator");
}

RecOp RecOp::from_shift_map(const std::map<int, Polynomial>& terms, InhomPart inhom) {
    std::map<int, Polynomial> live;
    for (const auto& [shift, p] : terms)
        if (!p.is_zero()) live.emplace(shift, p);
    if (live.empty()) throw DomainError("zero recurrence operator");
    const int s = std::min(0, live.begin()->first);
    std::vector<Polynomial> coeffs(static_cast<size_t>(live.rbegin()->first - s) + 1,
                                   Polynomial(Var::N));
    for (const auto& [shift, p] : live) coeffs[static_cast<size_t>(shift - s)] = p.shifted(-s);
    return RecOp(std::move(coeffs), inhom.shifted(-s));
}

const Polynomial& RecOp::coeff(int i) const {
    static const Polynomial zero(Var::N);
    if (i < 0 || i > order()) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

namespace {

// Shared content/sign canonicalization. `extra` points at the inhomogeneous
// coefficients, which take part in content removal and scaling (the whole
// relation is scaled, not just the homogeneous part).
struct Canonical {
    std::vector<Polynomial> coeffs;
    std::map<BoundarySymbol, Polynomial> inhom;
};

Canonical canonicalize(std::vector<Polynomial> coeffs,
                       std::map<BoundarySymbol, Polynomial> inhom) {
    // Polynomial content over every nonzero piece of the relation.
    Polynomial g(coeffs.front().var());
    auto fold = [&g](const Polynomial& p) {
        if (p.is_zero()) return;
        g = g.is_zero() ? p : poly_gcd(g, p);
    };
    for (const auto& p : coeffs) fold(p);
    // Inhomogeneous coefficients are in n while diff coefficients are in x;
    // content folding across both only happens for recurrences.
    for (const auto& [sym, p] : inhom) fold(p);
    if (g.degree() > 0) {
        for (auto& p : coeffs)
            if (!p.is_zero()) p = divide_exact(p, g);
        for (auto& [sym, p] : inhom) p = divide_exact(p, g);
    }

    // Scale to coprime integer coefficients across the whole relation.
    BigInt den_lcm(1), num_gcd(0);
    auto scan = [&](const Polynomial& p) {
        for (const auto& q : p.coeffs()) {
            if (q == 0) continue;
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(q));
        }
    };
    for (const auto& p : coeffs) scan(p);
    for (const auto& [sym, p] : inhom) scan(p);
    auto scan2 = [&](const Polynomial& p) {
        for (const auto& q : p.coeffs()) {
            if (q == 0) continue;
            BigInt scaled = numerator(q) * (den_lcm / denominator(q));
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(scaled));
        }
    };
    for (const auto& p : coeffs) scan2(p);
    for (const auto& [sym, p] : inhom) scan2(p);
    Rational scale(den_lcm, num_gcd);
    if (coeffs.back().leading() < 0) scale = -scale;
    for (auto& p : coeffs) p = p * scale;
    for (auto& [sym, p] : inhom) p = p * scale;
    return {std::move(coeffs), std::move(inhom)};
}

}  // namespace

DiffOp normalize_diffop(const DiffOp& op) {
    Canonical c = canonicalize(op.coeffs(), {});
    return DiffOp(std::move(c.coeffs));
}

RecOp shift_normalize_recop(const RecOp& op) {
    // Re-index so the lowest present shift is 0: replace the relation R(n)
    // by R(n-s); residuals shift accordingly and solutions are preserved.
    size_t s = 0;
    while (s < op.coeffs().size() && op.coeffs()[s].is_zero()) ++s;
    if (s == 0) return op;
    std::vector<Polynomial> coeffs;
    for (size_t i = s; i < op.coeffs().size(); ++i)
        coeffs.push_back(op.coeffs()[i].shifted(-static_cast<long>(s)));
    return RecOp(std::move(coeffs), op.inhom().shifted(-static_cast<long>(s)));
}

RecOp normalize_recop(const RecOp& op) {
    RecOp shifted = shift_normalize_recop(op);
    Canonical c = canonicalize(shifted.coeffs(), shifted.inhom().terms());
    InhomPart canon_inhom;
    for (const auto& [sym, p] : c.inhom) canon_inhom.add(sym, p);
    return RecOp(std::move(c.coeffs), std::move(canon_inhom));
}

bool equivalent(const DiffOp& a, const DiffOp& b) {
    return normalize_diffop(a) == normalize_diffop(b);
}

bool equivalent(const RecOp& a, const RecOp& b) {
    return normalize_recop(a) == normalize_recop(b);
}

namespace {

template <typename Scalar>
std::vector<Scalar> apply_recop_impl(const RecOp& op, std::span<const Scalar> seq,
                                     const std::map<BoundarySymbol, Scalar>& boundary) {
    const int d = op.order();
    if (static_cast<int>(seq.size()) < d + 1)
        throw DomainError("sequence too short for the recurrence order");
    for (const auto& [sym, c] : op.inhom().terms())
        if (!boundary.contains(sym))
            throw DomainError("missing boundary value for " + sym.str());

    std::vector<Scalar> residuals;
    for (size_t t = 0; t + static_cast<size_t>(d) < seq.size(); ++t) {
        Scalar r{};
        for (int i = 0; i <= d; ++i) {
            const Polynomial& p = op.coeff(i);
            if (p.is_zero()) continue;
            if constexpr (std::is_same_v<Scalar, Rational>)
                r += p(Rational(t)) * seq[t + static_cast<size_t>(i)];
            else
                r += p.eval_double(static_cast<double>(t)) * seq[t + static_cast<size_t>(i)];
        }
        for (const auto& [sym, c] : op.inhom().terms()) {
            if constexpr (std::is_same_v<Scalar, Rational>)
                r += c(Rational(t)) * boundary.at(sym);
            else
                r += c.eval_double(static_cast<double>(t)) * boundary.at(sym);
        }
        residuals.push_back(r);
    }
    return residuals;
}

}  // namespace

std::vector<Rational> apply_recop(const RecOp& op, std::span<const Rational> seq,
                                  const std::map<BoundarySymbol, Rational>& boundary) {
    return apply_recop_impl<Rational>(op, seq, boundary);
}

std::vector<double> apply_recop(const RecOp& op, std::span<const double> seq,
                                const std::map<BoundarySymbol, double>& boundary) {
    return apply_recop_impl<double>(op, seq, boundary);
}

}  // namespace holomellin
