#include "cutseq/precision.hpp"

#include <cstdlib>
#include <sstream>

namespace cutseq {

unsigned configured_digits()
{
    const char* env = std::getenv("CUTSEQ_PRECISION");
    if (!env || !*env)
        return default_decimal_digits;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0 || v > 100000)
        return default_decimal_digits;
    return unsigned(v);
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision())
{
    Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Integer& n) { return Real(n.get_str()); }

Real to_real(const Rational& q) { return to_real(q.get_num()) / to_real(q.get_den()); }

Real to_real(const QuadraticSurd& s)
{
    Real v = to_real(s.p());
    if (!s.is_rational())
        v += to_real(s.q()) * sqrt(to_real(s.D()));
    return v / to_real(s.r());
}

Real golden_real() { return (1 + sqrt(Real(5))) / 2; }

std::string decimal(const Real& x, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

} // namespace cutseq
