#pragma once

#include "cutseq/geodesic.hpp"

#include <optional>
#include <string>

namespace cutseq {

struct RenderWindow {
    double xmin = -1.5, xmax = 1.5, ymax = 1.6;
};

// SVG of the Farey tessellation (Stern-Brocot depth `depth` below each unit interval) with
// light/dark fills, and optionally a geodesic with its letters at the crossings.
std::string render_svg(const std::optional<OrientedGeodesic>& geo, Parity p, const RenderWindow& w, int depth,
                       std::size_t max_letters = 24);

} // namespace cutseq
