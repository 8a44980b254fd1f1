#pragma once

#include "cutseq/cf_engine.hpp"

namespace cutseq {

struct ExtensionPoint {
    QuadraticSurd x;   // (0,1)
    QuadraticSurd y;   // I_G (odd) or (-1,1) (even)
    int eps = 1;

    bool operator==(const ExtensionPoint& o) const = default;
};

ExtensionPoint natural_extension_odd(const ExtensionPoint& p);
ExtensionPoint natural_extension_odd_inv(const ExtensionPoint& p);
ExtensionPoint natural_extension_even(const ExtensionPoint& p);
ExtensionPoint natural_extension_even_inv(const ExtensionPoint& p);

// The inverse of the two-dimensional odd map written through the inverse return map
// r(z) = -e0 b0 - 1/z of the section, (b0, e0) the GCF digit of v:
//   (u, v) -> (-sign(v) / r(1/u), sign(v) r(-v)).
std::pair<QuadraticSurd, QuadraticSurd> inverse_via_rho(const QuadraticSurd& u, const QuadraticSurd& v);

} // namespace cutseq
