#include "holomellin/series_oracle.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <deque>

#include "holomellin/errors.hpp"

namespace holomellin {

RecOp ode_to_coeff_rec(const DiffOp& ode) {
    // x^m D^p (sum f_k x^k) = sum_k k(k-1)...(k-p+1) f_k x^{k+m-p}; matching
    // the coefficient of x^n gives, per monomial, the term
    // falling_factorial(p-m, p)(n) * f_{n+p-m}.
    std::map<int, Polynomial> shifts;
    for (int p = 0; p <= ode.order(); ++p) {
        const Polynomial& q = ode.coeff(p);
        for (int m = 0; m <= q.degree(); ++m) {
            const Rational& c = q.coeff(m);
            if (c == 0) continue;
            const int s = p - m;
            Polynomial term = falling_factorial(s, p) * c;
            auto [it, inserted] = shifts.try_emplace(s, term);
            if (!inserted) it->second += term;
        }
    }
    return shift_normalize_recop(RecOp::from_shift_map(shifts));
}

SeriesExpansion expand(const DiffOp& ode, const std::vector<Rational>& initial_coeffs, size_t K,
                       bool exact_mode) {
    if (K + 1 < initial_coeffs.size())
        throw DomainError("truncation order below the supplied initial coefficients");
    const RecOp rec = ode_to_coeff_rec(ode);
    const int d = rec.order();

    SeriesExpansion out;
    out.exact = exact_mode;
    out.source = ode;
    out.coeffs.resize(K + 1, 0.0);
    if (exact_mode) out.exact_coeffs.assign(K + 1, Rational(0));

    std::vector<double> lower(static_cast<size_t>(d) + 1);
    for (size_t k = 0; k <= K; ++k) {
        if (k < initial_coeffs.size()) {
            if (exact_mode) out.exact_coeffs[k] = initial_coeffs[k];
            out.coeffs[k] = to_double(initial_coeffs[k]);
            continue;
        }
        const long long t = static_cast<long long>(k) - d;
        if (t < 0)
            throw DomainError("insufficient initial coefficients to start the recurrence");
        const Rational lead = rec.coeff(d)(Rational(t));
        if (lead == 0) throw SingularIndexError(static_cast<long long>(k));
        if (exact_mode) {
            Rational acc(0);
            for (int i = 0; i < d; ++i)
                acc += rec.coeff(i)(Rational(t)) * out.exact_coeffs[static_cast<size_t>(t) + i];
            out.exact_coeffs[k] = -acc / lead;
            out.coeffs[k] = to_double(out.exact_coeffs[k]);
        } else {
            double acc = 0.0;
            for (int i = 0; i < d; ++i)
                acc += rec.coeff(i).eval_double(static_cast<double>(t)) *
                       out.coeffs[static_cast<size_t>(t) + i];
            out.coeffs[k] = -acc / rec.coeff(d).eval_double(static_cast<double>(t));
        }
    }
    return out;
}

namespace {

// Repeated averaging of the trailing partial sums. For an alternating tail
// with totally monotone term magnitudes the limit stays bracketed between
// consecutive entries, so each round roughly halves the bracket.
std::pair<double, double> averaged_tail(std::deque<double> partials) {
    double prev = partials.back();
    double last_diff = std::abs(partials.back() - partials.front());
    while (partials.size() > 1) {
        for (size_t i = 0; i + 1 < partials.size(); ++i)
            partials[i] = 0.5 * (partials[i] + partials[i + 1]);
        partials.pop_back();
        last_diff = std::abs(partials.back() - prev);
        prev = partials.back();
    }
    const double est = partials.front();
    const double err = 8.0 * last_diff + 64.0 * std::abs(est) * 1e-17;
    return {est, err};
}

constexpr size_t kWindow = 16;
constexpr size_t kPartials = 64;

// Generic termwise summation with tail classification. `term(k)` must be
// valid for k < count.
SumResult sum_series(const std::function<double(size_t)>& term, size_t count, double tol) {
    double sum = 0.0;
    std::deque<double> last_terms;    // trailing terms (signs and magnitudes)
    std::deque<double> last_partials; // trailing partial sums
    double prev_checkpoint_mag = -1.0;
    size_t prev_checkpoint_k = 0;

    SumResult best;  // best (value, bound) candidate seen so far
    best.bound = HUGE_VAL;

    for (size_t k = 0; k < count; ++k) {
        const double a = term(k);
        sum += a;
        last_terms.push_back(a);
        if (last_terms.size() > kWindow + 1) last_terms.pop_front();
        last_partials.push_back(sum);
        if (last_partials.size() > kPartials) last_partials.pop_front();
        best.terms = k + 1;
        if (best.bound == HUGE_VAL) best.value = sum;

        const bool checkpoint = (k + 1 == count) || (k >= 2 * kWindow && (k & 15) == 15);
        if (!checkpoint || last_terms.size() < kWindow + 1) continue;

        auto offer = [&](double value, double bound) {
            if (bound <= best.bound) {
                best.value = value;
                best.bound = bound;
                best.terms = k + 1;
            }
        };

        double max_mag = 0.0;
        for (double t : last_terms) max_mag = std::max(max_mag, std::abs(t));
        if (max_mag == 0.0) {
            // Terminating series: the tail is identically zero.
            best.value = sum;
            best.bound = 0.0;
            best.status = SumStatus::Converged;
            return best;
        }

        bool all_nonzero = true;
        for (double t : last_terms) all_nonzero &= t != 0.0;
        if (!all_nonzero) continue;

        double rmin = HUGE_VAL, rmax = 0.0;
        bool alternating = true;
        for (size_t i = 0; i + 1 < last_terms.size(); ++i) {
            const double r = std::abs(last_terms[i + 1]) / std::abs(last_terms[i]);
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
            alternating &= std::signbit(last_terms[i]) != std::signbit(last_terms[i + 1]);
        }
        const double mag = std::abs(last_terms.back());

        if (alternating) {
            // Plain alternating-series bound when the magnitudes do not grow.
            if (rmax <= 1.0 + 1e-12) offer(sum, mag);
            // Repeated averaging of the partial sums converges to the Abel
            // value for alternating tails up to geometric growth ~3, which
            // covers slowly varying and polynomially growing magnitudes.
            if (rmin >= 3.0) {
                best.status = SumStatus::Divergent;
                best.bound = HUGE_VAL;
                return best;
            }
            if (last_partials.size() == kPartials) {
                auto [est, err] = averaged_tail(last_partials);
                offer(est, err);
            }
        } else if (rmax <= 0.98) {
            // Geometric tail.
            offer(sum, mag * rmax / (1.0 - rmax));
        } else if (rmin >= 1.05) {
            // Sustained one-signed growth: radius of convergence below 1.
            best.status = SumStatus::Divergent;
            best.bound = HUGE_VAL;
            return best;
        } else if (prev_checkpoint_mag > 0.0 && mag < prev_checkpoint_mag) {
            // Algebraic decay |a_k| ~ k^-rho: integral-test tail estimate.
            const double rho = std::log(prev_checkpoint_mag / mag) /
                               std::log(static_cast<double>(k) / prev_checkpoint_k);
            if (rho > 1.1) offer(sum, mag * static_cast<double>(k) / (rho - 1.0));
        }

        if (best.bound <= tol) {
            best.status = SumStatus::Converged;
            return best;
        }
        if (k > 2 * prev_checkpoint_k) {
            prev_checkpoint_mag = mag;
            prev_checkpoint_k = k;
        }
    }

    if (best.bound == HUGE_VAL && count > 0) {
        best.value = sum;
        best.bound = std::abs(last_terms.back());
    }
    if (count == 0) best.bound = 0.0;
    best.status = best.bound <= tol ? SumStatus::Converged : SumStatus::BoundNotMet;
    return best;
}

}  // namespace

SumResult numeric_mellin(const SeriesExpansion& s, long n, double tol, size_t max_terms) {
    if (n < 0) throw DomainError("Mellin moment index must be nonnegative");
    const size_t count = std::min(s.size(), max_terms);
    return sum_series(
        [&s, n](size_t k) { return s.coeff(k) / static_cast<double>(n + static_cast<long>(k) + 1); },
        count, tol);
}

SumResult numeric_regularized_mellin(const SeriesExpansion& s, long n, double tol,
                                     size_t max_terms) {
    if (n < 1) throw DomainError("regularized Mellin moments need n >= 1");
    const size_t count = std::min(s.size(), max_terms);
    return sum_series(
        [&s, n](size_t k) {
            const double kk = static_cast<double>(k);
            return s.coeff(k) * (1.0 / (static_cast<double>(n) + kk + 1.0) - 1.0 / (kk + 1.0));
        },
        count, tol);
}

BoundaryValue numeric_boundary(const SeriesExpansion& s, int j, double tol) {
    if (j < 0) throw DomainError("negative derivative order");
    BoundaryValue out;
    if (s.size() <= static_cast<size_t>(j)) return out;

    // Termwise j-th derivative: g_k = f_{k+j} * (k+j)!/k!.
    std::vector<double> g(s.size() - static_cast<size_t>(j));
    for (size_t k = 0; k < g.size(); ++k) {
        double w = 1.0;
        for (int t = 1; t <= j; ++t) w *= static_cast<double>(k + static_cast<size_t>(t));
        g[k] = s.coeff(k + static_cast<size_t>(j)) * w;
    }

    // Evaluate at 1 - eps/2^r and extrapolate; the error expands in powers of
    // eps, so step-halving Richardson applies directly.
    constexpr int R = 7;
    const double eps0 = 0.125;
    double table[R + 1][R + 1];
    bool usable = true;
    for (int r = 0; r <= R; ++r) {
        const double x = 1.0 - eps0 / static_cast<double>(1 << r);
        double v = 0.0;
        for (size_t k = g.size(); k-- > 0;) v = v * x + g[k];
        // Truncation control: the dropped tail is geometric-ish in x.
        const double tail = std::abs(g.back()) * std::pow(x, static_cast<double>(g.size())) /
                            (1.0 - x);
        if (!std::isfinite(v) || tail > 1e-6 * (1.0 + std::abs(v))) usable = false;
        table[r][0] = v;
    }
    if (!usable) return out;
    for (int c = 1; c <= R; ++c)
        for (int r = c; r <= R; ++r) {
            const double fac = static_cast<double>(1 << c);
            table[r][c] = table[r][c - 1] + (table[r][c - 1] - table[r - 1][c - 1]) / (fac - 1.0);
        }
    out.value = table[R][R];
    out.error = std::abs(table[R][R] - table[R - 1][R - 1]) +
                1e-13 * (1.0 + std::abs(out.value));
    out.ok = std::isfinite(out.value) && out.error <= tol;
    return out;
}

double mellin_quadrature(const std::function<double(double)>& f, long n, double tol) {
    if (n < 0) throw DomainError("Mellin moment index must be nonnegative");
    boost::math::quadrature::tanh_sinh<double> integrator;
    double error = 0.0, l1 = 0.0;
    double value = integrator.integrate(
        [&f, n](double x) { return std::pow(x, static_cast<double>(n)) * f(x); }, 0.0, 1.0,
        tol, &error, &l1);
    if (!std::isfinite(value) || error > tol * (1.0 + std::abs(value)) * 10.0)
        throw DomainError("quadrature did not reach the requested tolerance");
    return value;
}

double regularized_mellin_quadrature(const std::function<double(double)>& f, long n, double tol) {
    if (n < 1) throw DomainError("regularized Mellin moments need n >= 1");
    boost::math::quadrature::tanh_sinh<double> integrator;
    double error = 0.0, l1 = 0.0;
    double value = integrator.integrate(
        [&f, n](double x) {
            return (std::pow(x, static_cast<double>(n)) - 1.0) * f(x);
        },
        0.0, 1.0, tol, &error, &l1);
    if (!std::isfinite(value) || error > tol * (1.0 + std::abs(value)) * 10.0)
        throw DomainError("quadrature did not reach the requested tolerance");
    return value;
}

}  // namespace holomellin
