#pragma once

#include "cutseq/rational.hpp"

namespace cutseq {

struct SquareDecomposition {
    Integer root;     // n = root^2 * kernel
    Integer kernel;   // square-free, >= 1
};

// n >= 1. If `hint` is a square-free D and n/D is a perfect square we skip factoring.
SquareDecomposition square_decompose(const Integer& n, const Integer& hint = 0);

bool is_perfect_square(const Integer& n);
Integer isqrt(const Integer& n);

} // namespace cutseq
