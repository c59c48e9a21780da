#pragma once

#include <string>
#include <vector>

#include "holomellin/operators.hpp"
#include "holomellin/rational_function.hpp"

namespace holomellin {

// A hypergeometric solution, represented by its consecutive-term ratio
// y(n+1)/y(n). Certificates returned by the solver are always verified by
// exact substitution first.
struct HypergeometricCertificate {
    RationalFunction ratio;  // in n
};

struct HyperOptions {
    int max_factor_degree = 3;  // degree cap on trailing/leading factor candidates
    int max_poly_degree = 8;    // degree cap on the polynomial part
};

// All hypergeometric solutions up to scalar multiple, found by classical
// candidate enumeration: monic factors a(n) of the trailing coefficient and
// b(n) of the shifted leading coefficient, the ratio constant z from the
// auxiliary leading-coefficient condition, and the polynomial part by
// degree-bounded linear algebra. Returns an empty list when none exist
// within the configured bounds; results come in a canonical order.
std::vector<HypergeometricCertificate> hyper_solutions(const RecOp& rec, HyperOptions opts = {});

struct RationalOdeOptions {
    int max_pole_order = 6;          // exponent bound per rational root of the leading coefficient
    int extra_numerator_degree = 12; // numerator degree beyond the denominator's
};

struct RationalSolutions {
    std::vector<RationalFunction> basis;  // verified, deterministically ordered
    std::vector<std::string> notes;       // configuration bounds hit, if any
};

// Basis of rational-function solutions with denominators supported on the
// rational roots of the leading coefficient; numerators by degree-bounded
// linear algebra. Every returned solution is verified symbolically.
RationalSolutions rational_ode_solutions(const DiffOp& ode, RationalOdeOptions opts = {});

struct CertificateCheck {
    bool ok = false;
    RationalFunction residual;  // zero iff ok
};

// Exact substitution of a candidate into the operator.
CertificateCheck verify_certificate(const RecOp& rec, const HypergeometricCertificate& cert);
CertificateCheck verify_certificate(const DiffOp& ode, const RationalFunction& candidate);

}  // namespace holomellin
