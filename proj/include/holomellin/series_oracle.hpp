#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "holomellin/operators.hpp"

namespace holomellin {

// Recurrence satisfied by the Taylor coefficients f_k of any power-series
// solution of the ODE: substitute sum f_k x^k, match powers of x. Output is
// shift-normalized and homogeneous.
RecOp ode_to_coeff_rec(const DiffOp& ode);

// Power-series expansion of an ODE solution, unrolled from the induced
// coefficient recurrence. Exact mode keeps rationals; float mode runs in
// doubles for large truncation orders.
struct SeriesExpansion {
    std::vector<Rational> exact_coeffs;  // filled in exact mode
    std::vector<double> coeffs;          // always filled
    bool exact = false;
    std::optional<DiffOp> source;  // the equation the expansion solves

    size_t size() const { return coeffs.size(); }
    double coeff(size_t k) const { return k < coeffs.size() ? coeffs[k] : 0.0; }
};

// Coefficients f_0..f_K. Initial coefficients seed the recurrence and must
// cover every index at which its leading coefficient vanishes.
SeriesExpansion expand(const DiffOp& ode, const std::vector<Rational>& initial_coeffs, size_t K,
                       bool exact_mode = false);

enum class SumStatus { Converged, BoundNotMet, Divergent };

struct SumResult {
    double value = 0.0;
    double bound = 0.0;   // achieved tail bound (best effort on failure)
    size_t terms = 0;     // terms consumed
    SumStatus status = SumStatus::BoundNotMet;

    bool ok() const { return status == SumStatus::Converged; }
};

// M[f](n) = integral_0^1 x^n f(x) dx summed termwise as sum_k f_k/(n+k+1).
// Geometric tails get the ratio bound; alternating tails the alternating
// bound, tightened by repeated averaging of partial sums when plain
// truncation cannot reach tol; slowly decaying positive tails an
// algebraic-decay estimate. Sustained term growth reports Divergent (radius
// of convergence below 1: oracle inapplicable).
SumResult numeric_mellin(const SeriesExpansion& s, long n, double tol,
                         size_t max_terms = 1000000);

// integral_0^1 (x^n - 1) f(x) dx, n >= 1, summed termwise as
// sum_k f_k (1/(n+k+1) - 1/(k+1)); the subtraction happens per term, so
// individually divergent pieces never materialize.
SumResult numeric_regularized_mellin(const SeriesExpansion& s, long n, double tol,
                                     size_t max_terms = 1000000);

struct BoundaryValue {
    double value = 0.0;
    double error = 0.0;  // estimated
    bool ok = false;
};

// f^(j)(1), evaluated from the termwise-differentiated series at the points
// 1 - eps/2^r and Richardson-extrapolated to 1. Reports failure when the
// extrapolation does not settle (series not convergent at 1).
BoundaryValue numeric_boundary(const SeriesExpansion& s, int j, double tol = 1e-7);

// Quadrature fallbacks for integrands that have no power series at 0, backed
// by tanh-sinh quadrature on (0,1).
double mellin_quadrature(const std::function<double(double)>& f, long n, double tol);
double regularized_mellin_quadrature(const std::function<double(double)>& f, long n, double tol);

}  // namespace holomellin
