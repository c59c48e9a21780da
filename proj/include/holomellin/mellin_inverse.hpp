#pragma once

#include <map>
#include <string>
#include <vector>

#include "holomellin/operators.hpp"

namespace holomellin {

// Intermediate state of the inverse conversion: a relation
//
//   sum_i rec_part[i](n) * M[f](n+i)
//     + M[ sum_j diff_part[j](x) * f^(j)(x) ](n)
//     + sum_s inhom_s(n) * s  =  0
//
// Reduction passes move mass from rec_part into diff_part while strictly
// decreasing the maximal n-degree of rec_part, until only the differential
// relation and boundary constants remain.
struct MixedRelation {
    std::map<int, Polynomial> rec_part;   // shift -> coefficient in n
    std::map<int, Polynomial> diff_part;  // derivative order -> coefficient in x
    InhomPart inhom;

    // Max n-degree over rec_part; -1 when rec_part is empty.
    int max_rec_degree() const;
    std::string str() const;
};

MixedRelation relation_from_rec(const RecOp& rec);

// One degree-reduction pass at the current maximal n-degree k: every shift i
// whose coefficient has an n^k term with scalar coefficient c_i trades
// c_i n^k M(n+i) for c_i (-1)^k x^{k+i} f^(k)(x) minus the Mellin image of
// that monomial term. The n^k terms cancel exactly; a surviving one is an
// internal error, never silent.
MixedRelation reduction_pass(const MixedRelation& rel);

// Requires rec_part empty. If boundary terms remain, differentiates the
// x-relation once (the constants f^(j)(1) vanish); returns the normalized
// differential operator.
DiffOp eliminate_boundary(const MixedRelation& rel);

struct InverseTrace {
    std::vector<MixedRelation> passes;  // state after each reduction pass
    bool differentiated = false;
};

// The inverse conversion: holonomic recurrence for M[f](n), homogeneous and
// normalized, to a holonomic differential equation for f(x). Terminates in at
// most (max coefficient degree + 1) passes.
DiffOp rec_to_ode(const RecOp& rec, InverseTrace* trace = nullptr);

}  // namespace holomellin
