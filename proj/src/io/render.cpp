#include "cutseq/render.hpp"

#include "cutseq/errors.hpp"
#include "cutseq/farey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cutseq {

namespace {

class Canvas {
public:
    Canvas(const RenderWindow& w) : w_(w), scale_(800.0 / (w.xmax - w.xmin)) {}

    double X(double x) const { return (x - w_.xmin) * scale_; }
    double Y(double y) const { return (w_.ymax - y) * scale_; }
    double len(double d) const { return d * scale_; }
    double width() const { return 800.0; }
    double height() const { return len(w_.ymax); }

private:
    RenderWindow w_;
    double scale_;
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

double value(const FareyPoint& p) { return p.p.get_d() / p.q.get_d(); }

void triangle_path(std::ostringstream& os, const Canvas& c, const Triangle& t)
{
    const char* fill = triangle_shade(t) == Shade::Dark ? "#6b6b6b" : "#e4e4e4";
    FareyPoint v[3] = {t.a, t.b, t.c};
    // finite vertices in increasing order
    std::vector<double> xs;
    for (const auto& p : v)
        if (!p.is_infinity())
            xs.push_back(value(p));
    std::sort(xs.begin(), xs.end());
    os << "<path class=\"" << (triangle_shade(t) == Shade::Dark ? "dark" : "light") << "\" fill=\"" << fill
       << "\" d=\"";
    double y0 = c.Y(0);
    if (xs.size() == 2) {
        double a = xs[0], b = xs[1];
        os << "M" << fmt(c.X(a)) << ",0" << " L" << fmt(c.X(a)) << ","
           << fmt(y0) << " A" << fmt(c.len((b - a) / 2)) << "," << fmt(c.len((b - a) / 2)) << " 0 0 1 " << fmt(c.X(b))
           << "," << fmt(y0) << " L" << fmt(c.X(b)) << ",0" << " Z";
    } else {
        double a = xs[0], m = xs[1], b = xs[2];
        os << "M" << fmt(c.X(a)) << "," << fmt(y0) << " A" << fmt(c.len((b - a) / 2)) << ","
           << fmt(c.len((b - a) / 2)) << " 0 0 1 " << fmt(c.X(b)) << "," << fmt(y0) << " A"
           << fmt(c.len((b - m) / 2)) << "," << fmt(c.len((b - m) / 2)) << " 0 0 0 " << fmt(c.X(m)) << "," << fmt(y0)
           << " A" << fmt(c.len((m - a) / 2)) << "," << fmt(c.len((m - a) / 2)) << " 0 0 0 " << fmt(c.X(a)) << ","
           << fmt(y0) << " Z";
    }
    os << "\" stroke=\"#222\" stroke-width=\"0.6\"/>\n";
}

void subdivide(std::ostringstream& os, const Canvas& c, const FareyPoint& a, const FareyPoint& b, int depth)
{
    if (depth <= 0)
        return;
    FareyPoint m = FareyPoint::of(a.p + b.p, a.q + b.q);
    triangle_path(os, c, Triangle{a, m, b});
    subdivide(os, c, a, m, depth - 1);
    subdivide(os, c, m, b, depth - 1);
}

// point where the geodesic over (u1,u2) meets the geodesic over edge e
std::optional<std::pair<double, double>> meet(double u1, double u2, const FareyEdge& e)
{
    double c0 = (u1 + u2) / 2, r0 = std::abs(u2 - u1) / 2;
    double x;
    if (e.u.is_infinity() || e.v.is_infinity()) {
        x = value(e.u.is_infinity() ? e.v : e.u);
    } else {
        double a = value(e.u), b = value(e.v);
        double c1 = (a + b) / 2, r1 = std::abs(b - a) / 2;
        if (c1 == c0)
            return std::nullopt;
        x = (c0 + c1) / 2 + (r0 * r0 - r1 * r1) / (2 * (c1 - c0));
    }
    double h = r0 * r0 - (x - c0) * (x - c0);
    if (h <= 0)
        return std::nullopt;
    return std::pair{x, std::sqrt(h)};
}

} // namespace

std::string render_svg(const std::optional<OrientedGeodesic>& geo, Parity p, const RenderWindow& w, int depth,
                       std::size_t max_letters)
{
    if (!(w.xmin < w.xmax) || !(w.ymax > 0) || !std::isfinite(w.xmin) || !std::isfinite(w.xmax) ||
        !std::isfinite(w.ymax))
        throw DomainError("degenerate render window");
    if (depth < 0 || depth > 12)
        throw DomainError("render depth must be in 0..12");
    Canvas c(w);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(c.width()) << "\" height=\""
       << fmt(c.height()) << "\" viewBox=\"0 0 " << fmt(c.width()) << " " << fmt(c.height()) << "\">\n";
    os << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << fmt(c.width()) << "\" height=\""
       << fmt(c.height()) << "\"/></clipPath></defs>\n";
    os << "<g clip-path=\"url(#view)\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(c.width()) << "\" height=\"" << fmt(c.height())
       << "\" fill=\"white\"/>\n";

    long lo = long(std::floor(w.xmin)) - 1, hi = long(std::ceil(w.xmax));
    for (long n = lo; n <= hi; ++n) {
        FareyPoint a = FareyPoint::of(n, 1), b = FareyPoint::of(n + 1, 1);
        triangle_path(os, c, Triangle{a, b, FareyPoint::infinity()});
        subdivide(os, c, a, b, depth);
    }

    if (geo) {
        if (geo->forward.is_rational() || geo->backward.is_rational())
            throw DomainError("render needs irrational endpoints");
        double f = geo->forward.to_double(), b = geo->backward.to_double();
        double r = std::abs(f - b) / 2;
        os << "<path class=\"geodesic\" d=\"M" << fmt(c.X(b)) << "," << fmt(c.Y(0)) << " A" << fmt(c.len(r)) << ","
           << fmt(c.len(r)) << " 0 0 " << (f > b ? 1 : 0) << " " << fmt(c.X(f)) << "," << fmt(c.Y(0))
           << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";

        // start on a vertical edge the geodesic crosses: (sign f, inf) in the section, else
        // the integer between the endpoints closest to the top of the arc
        std::optional<FareyEdge> start;
        if (in_section(*geo, p)) {
            start = FareyEdge{FareyPoint::of(geo->forward.sign(), 1), FareyPoint::infinity()};
        } else {
            QuadraticSurd lo_s = std::min(geo->forward, geo->backward), hi_s = std::max(geo->forward, geo->backward);
            Integer n = lo_s.floor() + 1;
            if (QuadraticSurd(n) < hi_s) {
                Integer mid = QuadraticSurd((lo_s + hi_s) / QuadraticSurd(2L)).floor();
                if (QuadraticSurd(mid) > lo_s)
                    n = mid;
                start = FareyEdge{FareyPoint::of(n, 1), FareyPoint::infinity()};
            }
        }
        if (start) {
            auto crossings = farey_walk(*geo, *start, max_letters, p == Parity::Odd);
            for (const auto& cr : crossings) {
                auto pt = meet(b, f, cr.exit);
                if (!pt)
                    continue;
                LetterString one{cr.letter};
                os << "<text class=\"letter\" x=\"" << fmt(c.X(pt->first)) << "\" y=\"" << fmt(c.Y(pt->second) - 4)
                   << "\" font-size=\"14\" font-family=\"serif\" fill=\"#c0392b\">" << to_ascii(one) << "</text>\n";
            }
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace cutseq
