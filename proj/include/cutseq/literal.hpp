#pragma once

#include "cutseq/matrix.hpp"

#include <string_view>

namespace cutseq {

// Surd literals: "(p+q*sqrt(D))/r", "p/q", "3", and in general any expression in integers,
// sqrt(rational), + - * / and parentheses that stays in one quadratic field.
QuadraticSurd parse_surd(std::string_view text);

// "[[a,b],[c,d]]" with integer entries
Matrix2 parse_matrix2(std::string_view text);
// same, determinant 1 required
UnimodularMatrix parse_matrix(std::string_view text);

} // namespace cutseq
