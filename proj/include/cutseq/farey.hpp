#pragma once

#include "cutseq/geodesic.hpp"

#include <optional>
#include <vector>

namespace cutseq {

// Vertex of the Farey tessellation, p/q in lowest terms with q >= 0; infinity is 1/0.
struct FareyPoint {
    Integer p = 1, q = 0;

    static FareyPoint infinity() { return {}; }
    static FareyPoint of(const Integer& p, const Integer& q);
    bool is_infinity() const { return q == 0; }
    ExtendedReal value() const;
    bool operator==(const FareyPoint&) const = default;
    std::string str() const;
};

struct FareyEdge {
    FareyPoint u, v;
    bool same_as(const FareyEdge& o) const { return (u == o.u && v == o.v) || (u == o.v && v == o.u); }
};

struct Triangle {
    FareyPoint a, b, c;
};

// The two triangles on an edge have these third vertices.
std::pair<FareyPoint, FareyPoint> third_vertices(const FareyEdge& e);

// Dark iff g is in Gamma for any g in PSL2(Z) carrying (inf, 0, 1) onto the triangle;
// (0,1,inf) is dark and (-1,0,inf) light.
Shade triangle_shade(const Triangle& t);

struct Crossing {
    Letter letter;       // shaded if requested
    Triangle triangle;
    FareyEdge exit;
};

// Walk the triangles crossed by geo after it crosses `start`, stopping after max_steps or right
// after crossing `stop`. Endpoints must be irrational.
std::vector<Crossing> farey_walk(const OrientedGeodesic& geo, const FareyEdge& start, std::size_t max_steps,
                                 bool shaded, const std::optional<FareyEdge>& stop = std::nullopt);

// Read a letter string backwards from the edge (eps, inf) crossed by a geodesic with
// forward endpoint of sign eps and backward endpoint on the far side. Returns the open
// interval that must contain the backward endpoint (either end may be infinite when the
// letters do not yet pin it down to a bounded arc).
struct ArcInterval {
    std::optional<Rational> lo, hi;   // nullopt: unbounded on that side
    bool wraps = false;               // complement of [lo, hi] through infinity
};
ArcInterval backward_endpoint_interval(const LetterString& letters_left_of_xi, int eps);

} // namespace cutseq
