#pragma once

#include "cutseq/precision.hpp"

#include <string>

namespace cutseq {

enum class MeasureName { MuOdd, NuOdd, MuBarOdd, MuEven, NuEven, MuBarEven };
enum class MapName { TOdd, TauOdd, TBarOdd, TEven, TauEven, TBarEven };

std::string to_string(MeasureName m);   // "mu_o", ...
std::string to_string(MapName m);       // "T_o", ...
MeasureName measure_from_string(const std::string& s);
MapName map_from_string(const std::string& s);
// the map each measure is invariant under
MapName natural_map(MeasureName m);
bool is_two_dimensional(MeasureName m);

struct MeasureSpec {
    MeasureName name = MeasureName::MuOdd;
    bool normalized = false;   // divide by 3 log G; only the finite odd measures
};

struct Interval {
    Real lo, hi;
};

struct Rect {
    Interval x, y;
};

// Closed-form masses (logarithms of cross ratios). Densities:
//   mu_o   1/(u+G-1) - 1/(u-G-1) on (0,1)     nu_o   1/(1+v) on (G-2,G)
//   mu_e   1/(1+u) + 1/(1-u)     on (0,1)     nu_e   1/(1+v) on (-1,1)
//   mu_bar (1+xy)^-2 on (0,1) x (G-2,G) (odd) or (0,1) x (-1,1) (even)
// Throws DomainError when the region leaves the domain.
Real measure_mass(const MeasureSpec& m, const Interval& region);
Real measure_mass(const MeasureSpec& m, const Rect& region);

// the argument of the logarithm above, for accumulating many small pieces
Real mass_ratio(MeasureName m, const Interval& region);
Real mass_ratio(MeasureName m, const Rect& region);

struct InvarianceReport {
    Real region_mass;
    Real preimage_mass;
    Real difference;
    double tolerance = 1e-10;
    bool pass = false;
    long branches_exact = 0;   // branches summed term by term before the extrapolated tail
};

// mass(T^-1(region)) against mass(region), summing the preimage over all branches. The
// tail of the branch sum is extrapolated (Richardson on partial sums at doubling cutoffs).
InvarianceReport check_invariance(MeasureName m, MapName map, const Interval& region, double tol = 1e-10);
InvarianceReport check_invariance(MeasureName m, MapName map, const Rect& region, double tol = 1e-10);

} // namespace cutseq
