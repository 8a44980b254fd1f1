#pragma once

#include "cutseq/quadratic_surd.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace cutseq {

using Real = boost::multiprecision::mpfr_float;

constexpr unsigned default_decimal_digits = 200;

// CUTSEQ_PRECISION if set to a positive integer, else 200
unsigned configured_digits();

// Sets the working precision of Real for the lifetime of the guard.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Real to_real(const Integer& n);
Real to_real(const Rational& q);
Real to_real(const QuadraticSurd& s);
Real golden_real();

// fixed-point decimal with the given number of significant digits
std::string decimal(const Real& x, int digits = 20);

} // namespace cutseq
