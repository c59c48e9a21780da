#pragma once

#include <string>
#include <variant>

#include "holomellin/operators.hpp"

namespace holomellin {

// Result of lowering an operator expression. `cleared_denominators` is set
// when rational-function coefficients were multiplied away by a common
// denominator; the CLI reports this.
struct ParsedOperator {
    std::variant<DiffOp, RecOp> op;
    bool cleared_denominators = false;

    bool is_diff() const { return std::holds_alternative<DiffOp>(op); }
    const DiffOp& diff() const { return std::get<DiffOp>(op); }
    const RecOp& rec() const { return std::get<RecOp>(op); }
};

// Which operator kind the caller expects; Any infers it from the expression.
enum class OperatorKind { Any, Diff, Rec };

// Grammar (usual precedence, ^ > unary - > * / > binary +-):
//   equation := expr ('=' expr)?
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := ('+'|'-') factor | power
//   power    := atom ('^' INT)?
//   atom     := INT | 'x' | 'n' | 'Dx' | 'S' | 'f' | 'f' '(' n±INT ')'
//             | 'M' '(' n±INT ')' | 'f^(' INT ')(1)' | 'M(' INT ')'
//             | 'f' '(' '1' ')' | '(' expr ')'
// Dx and S are right-multiplying atoms acting on an implicit f; coefficients
// commute past them (no Ore composition). Mixing Dx with shift atoms is
// rejected, as is mixing the variables x and n.
ParsedOperator parse_operator(const std::string& text, OperatorKind expected = OperatorKind::Any);

// Polynomial subset of the grammar, e.g. "-3 + x", "1/2*n^2 + n".
Polynomial parse_polynomial(const std::string& text, Var var);

// Canonical renderings; parse_operator(pretty(op)) recovers the operator.
std::string pretty(const DiffOp& op);
std::string pretty(const RecOp& op);

}  // namespace holomellin
