#pragma once

#include <string>
#include <variant>

#include "holomellin/operators.hpp"

namespace holomellin {

// Wire schema:
//   {"kind":"diffop"|"recop","var":"x"|"n","coeffs":["<poly>",...],
//    "inhom":[{"symbol":"f^(j)(1)"|"M(n0)","coeff":"<poly in n>"},...]}
// Coefficients are exact strings; no floats anywhere.
std::string to_json_string(const DiffOp& op, bool compact = true);
std::string to_json_string(const RecOp& op, bool compact = true);

std::variant<DiffOp, RecOp> operator_from_json(const std::string& text);

}  // namespace holomellin
