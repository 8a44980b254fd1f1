#pragma once

#include "cutseq/geodesic.hpp"
#include "cutseq/precision.hpp"
#include "cutseq/subgroup.hpp"

#include <optional>
#include <string>

namespace cutseq {

// Hyperbolic distance from xi (on Re z = sign(gamma_inf)) to the next section crossing.
// Computed as 1/2 log |F(gamma_inf) / F(gamma_-inf)| with
//   F(x) = rho(x)^2 (x - sign(gamma_inf)) / (rho(x) - sign(rho(gamma_inf)))
// where rho is the return-map matrix of gamma. The F values are exact surds.
Real roof(const OrientedGeodesic& geo, Parity p);
// F(gamma_inf) and F(gamma_-inf) themselves
std::pair<QuadraticSurd, QuadraticSurd> roof_factors(const OrientedGeodesic& geo, Parity p);

struct GeodesicLengthReport {
    DigitList period;
    Parity parity = Parity::Odd;
    Real length;           // = via_product
    Real via_product;      // sum over cyclic shifts of log |gamma_inf / gamma_-inf|
    Real via_trace;        // 2 arccosh(|tr M| / 2)
    Real via_derivative;   // 1/2 log of (rho^r)'(gamma_inf) / (rho^r)'(gamma_-inf)
    Real relative_error;   // |via_product - via_trace| / via_trace
    UnimodularMatrix matrix;   // rho^r, from exact stepping
    SubgroupMembership membership;
    int multiplicity = 1;      // period is a proper power q^j when > 1
};

// Throws AdmissibilityError for a bad digit or sign product -1.
GeodesicLengthReport closed_length(const DigitList& period, Parity p);

struct PeriodicityReport {
    QuadraticSurd alpha;
    Parity parity = Parity::Odd;
    bool window = false;      // conjugate in (-G, 2-G) (odd) or (-1, 1) (even)
    bool expansion = false;   // expansion of alpha has no preperiod
    DigitList period;
    std::optional<bool> reversal;   // conjugate = -<<reversed period>>, checked when periodic
};

// alpha > 1 irrational. Throws std::logic_error if the two tests disagree.
PeriodicityReport purely_periodic(const QuadraticSurd& alpha, Parity p);
inline bool purely_periodic_ocf(const QuadraticSurd& a) { return purely_periodic(a, Parity::Odd).window; }
inline bool purely_periodic_ecf(const QuadraticSurd& a) { return purely_periodic(a, Parity::Even).window; }

struct EquivalenceResult {
    bool equivalent = false;   // false means not found within the bound (inconclusive)
    std::size_t r = 0, s = 0;  // t_r(alpha') = t_s(beta')
    std::optional<QuadraticSurd> witness;
    std::size_t bound = 0;
    QuadraticSurd alpha, beta;   // after translation by powers of T^2 into (1, inf)
};

constexpr std::size_t default_equivalence_depth = 64;

// Tail search for alpha ~ beta under Gamma (odd) or Theta (even). Arguments may be any
// irrational surds; they are moved above 1 by T^2 translations first. Without an explicit
// bound the search depth is preperiod + 2 * period + 1 of the longer expansion.
EquivalenceResult equivalent(const QuadraticSurd& alpha, const QuadraticSurd& beta, Parity p,
                             std::optional<std::size_t> depth_bound = std::nullopt);

enum class BirkhoffMap { TOdd, TauOdd };

struct BirkhoffResult {
    Real average;
    std::size_t steps = 0;   // orbit points counted
    bool aborted = false;    // orbit landed on a branch boundary
};

// (1/N) #{n < N : T^n x0 in [lo, hi]} on a floating orbit carried at `digits` digits.
BirkhoffResult birkhoff_average(BirkhoffMap map, const Real& lo, const Real& hi, const Real& x0, std::size_t n,
                                unsigned digits = 100);
// one step of the map at the current precision; nullopt on a boundary
std::optional<Real> birkhoff_step(BirkhoffMap map, const Real& x);

} // namespace cutseq
