#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "holomellin/polynomial.hpp"

namespace holomellin {

// Opaque boundary constant: the j-th derivative of f at 1, or a Mellin moment
// M[f](n0). Converters never evaluate these; numeric values are injected only
// during verification.
struct BoundarySymbol {
    enum class Kind { DerivAtOne, MellinMoment };
    Kind kind;
    int index;  // j, resp. n0 (both >= 0)

    static BoundarySymbol deriv_at_one(int j);
    static BoundarySymbol mellin_moment(int n0);

    auto operator<=>(const BoundarySymbol&) const = default;

    // "f^(j)(1)" resp. "M(n0)".
    std::string str() const;
    static BoundarySymbol parse(const std::string& text);
};

// Sum of boundary symbols with polynomial-in-n coefficients. Entries with a
// zero coefficient are dropped; an empty map means homogeneous.
class InhomPart {
public:
    bool empty() const { return terms_.empty(); }
    const std::map<BoundarySymbol, Polynomial>& terms() const { return terms_; }

    void add(const BoundarySymbol& sym, const Polynomial& coeff);
    InhomPart operator+(const InhomPart& o) const;
    InhomPart scaled(const Rational& s) const;
    // Apply n -> n+k to every coefficient.
    InhomPart shifted(long k) const;
    bool operator==(const InhomPart&) const = default;

private:
    std::map<BoundarySymbol, Polynomial> terms_;
};

// Linear differential operator sum_i q_i(x) D^i, polynomial coefficients,
// leading coefficient nonzero.
class DiffOp {
public:
    explicit DiffOp(std::vector<Polynomial> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& coeff(int i) const;
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }

    bool operator==(const DiffOp&) const = default;

private:
    std::vector<Polynomial> coeffs_;  // polys in x, index = derivative order
};

// Linear recurrence operator sum_i p_i(n) S^i plus an inhomogeneous part over
// boundary symbols; the relation reads  sum_i p_i(n) f_{n+i} + inhom(n) = 0.
// Coefficients are stored from shift 0; the leading one is nonzero but the
// trailing one may be zero until shift normalization.
class RecOp {
public:
    explicit RecOp(std::vector<Polynomial> coeffs, InhomPart inhom = {});

    // Builder for conversion code that naturally produces terms at arbitrary
    // (possibly negative) shifts. Negative shifts are re-indexed into storage
    // by the solution-preserving substitution n -> n - s_min.
    static RecOp from_shift_map(const std::map<int, Polynomial>& terms, InhomPart inhom = {});

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& coeff(int i) const;
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    const InhomPart& inhom() const { return inhom_; }
    bool homogeneous() const { return inhom_.empty(); }

    bool operator==(const RecOp&) const = default;

private:
    RecOp() = default;
    std::vector<Polynomial> coeffs_;  // polys in n, index = shift
    InhomPart inhom_;
};

// Canonical forms: polynomial content removed (including the inhomogeneous
// part), coefficients scaled to coprime integers, and the leading
// coefficient's leading scalar positive. normalize_recop additionally
// re-indexes shifts so the lowest present shift is 0, substituting
// n -> n - s everywhere (residuals of the result at n equal residuals of the
// input at n - s).
DiffOp normalize_diffop(const DiffOp& op);
RecOp normalize_recop(const RecOp& op);

// Shift re-indexing alone, without content or sign canonicalization. Used
// where integer roots of a common factor still carry meaning (the unrolling
// of coefficient recurrences).
RecOp shift_normalize_recop(const RecOp& op);

// Equality modulo normalization; the form in which all golden comparisons run.
bool equivalent(const DiffOp& a, const DiffOp& b);
bool equivalent(const RecOp& a, const RecOp& b);

// Residuals r(t) = sum_i p_i(t) seq[t+i] + sum_s inhom_s(t)*value(s) for
// t = 0..len(seq)-order-1. All-zero residuals mean seq satisfies the relation
// on that range.
std::vector<Rational> apply_recop(const RecOp& op, std::span<const Rational> seq,
                                  const std::map<BoundarySymbol, Rational>& boundary = {});
std::vector<double> apply_recop(const RecOp& op, std::span<const double> seq,
                                const std::map<BoundarySymbol, double>& boundary = {});

}  // namespace holomellin
