#pragma once

#include <map>

#include "holomellin/operators.hpp"

namespace holomellin {

// Mellin image of a single monomial term x^m f^(p)(x) under
// M[g](n) = integral_0^1 x^n g(x) dx:
//
//   M[x^m f^(p)](n) = (-1)^p (n+m)!/(n+m-p)! M[f](n+m-p)
//                     + sum_{i=0}^{p-1} (-1)^i (n+m)!/(n+m-i)! f^(p-1-i)(1)
//
// The factorial quotients are the falling-factorial polynomials in n, so the
// image is one shifted M-term plus boundary constants with polynomial
// coefficients.
struct MellinTermImage {
    std::map<int, Polynomial> shifts;  // shift m-p -> coefficient in n
    InhomPart inhom;
};

MellinTermImage mellin_of_term(long m, long p);

// Applies the Mellin transform to a holonomic differential equation: expands
// every coefficient into monomials, maps each x^m f^(i) through
// mellin_of_term, sums the images, and shift-normalizes. The result
// annihilates n -> M[f](n) whenever the transform exists; boundary values
// f^(j)(1) stay symbolic in the inhomogeneous part.
RecOp ode_to_mellin_rec(const DiffOp& ode);

}  // namespace holomellin
