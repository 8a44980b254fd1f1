#include "cutseq/farey.hpp"

#include "cutseq/errors.hpp"
#include "cutseq/subgroup.hpp"

namespace cutseq {

FareyPoint FareyPoint::of(const Integer& p, const Integer& q)
{
    if (p == 0 && q == 0)
        throw DomainError("0/0 is not a Farey vertex");
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    FareyPoint f{p / g, q / g};
    if (f.q < 0 || (f.q == 0 && f.p < 0)) {
        f.p = -f.p;
        f.q = -f.q;
    }
    return f;
}

ExtendedReal FareyPoint::value() const
{
    if (is_infinity())
        return ExtendedReal::infinity();
    return ExtendedReal(Rational(p, q));
}

std::string FareyPoint::str() const
{
    if (is_infinity())
        return "inf";
    return q == 1 ? p.get_str() : p.get_str() + "/" + q.get_str();
}

std::pair<FareyPoint, FareyPoint> third_vertices(const FareyEdge& e)
{
    return {FareyPoint::of(e.u.p + e.v.p, e.u.q + e.v.q), FareyPoint::of(e.u.p - e.v.p, e.u.q - e.v.q)};
}

Shade triangle_shade(const Triangle& t)
{
    auto build = [](const FareyPoint& a, const FareyPoint& b) {
        Integer det = a.p * b.q - b.p * a.q;
        if (det == 1)
            return Matrix2{a.p, b.p, a.q, b.q};
        if (det == -1)
            return Matrix2{a.p, -b.p, a.q, -b.q};
        throw DomainError("not a Farey triangle");
    };
    Matrix2 g = build(t.a, t.b);
    FareyPoint one = FareyPoint::of(g.a + g.b, g.c + g.d);
    if (!(one == t.c)) {
        g = build(t.b, t.a);
        if (!(FareyPoint::of(g.a + g.b, g.c + g.d) == t.c))
            throw DomainError("not a Farey triangle");
    }
    bool in_gamma = classify_subgroup(UnimodularMatrix(g)).gamma_odd;
    return in_gamma ? Shade::Dark : Shade::Light;
}

namespace {

// t strictly inside the arc from u to v that avoids infinity (or, with infinity as an end,
// the arc above the finite end)
bool between(const ExtendedReal& t, const FareyPoint& u, const FareyPoint& v)
{
    if (t.is_infinity())
        return false;
    const QuadraticSurd& x = t.value();
    if (u.is_infinity())
        return x > QuadraticSurd(Rational(v.p, v.q));
    if (v.is_infinity())
        return x > QuadraticSurd(Rational(u.p, u.q));
    QuadraticSurd a(Rational(u.p, u.q)), b(Rational(v.p, v.q));
    if (b < a)
        std::swap(a, b);
    return a < x && x < b;
}

bool separates(const OrientedGeodesic& geo, const FareyPoint& u, const FareyPoint& v)
{
    return between(geo.forward, u, v) != between(geo.backward, u, v);
}

bool strictly_between_endpoints(const FareyPoint& t, const OrientedGeodesic& geo)
{
    if (t.is_infinity())
        return false;
    QuadraticSurd x(Rational(t.p, t.q));
    const QuadraticSurd& lo = geo.forward < geo.backward ? geo.forward : geo.backward;
    const QuadraticSurd& hi = geo.forward < geo.backward ? geo.backward : geo.forward;
    return lo < x && x < hi;
}

Side side_of(const FareyPoint& t, const OrientedGeodesic& geo)
{
    bool left = strictly_between_endpoints(t, geo) == (geo.backward > geo.forward);
    return left ? Side::L : Side::R;
}

} // namespace

std::vector<Crossing> farey_walk(const OrientedGeodesic& geo, const FareyEdge& start, std::size_t max_steps,
                                 bool shaded, const std::optional<FareyEdge>& stop)
{
    if (geo.forward.is_rational() || geo.backward.is_rational())
        throw DomainError("farey_walk needs irrational endpoints");
    if (!separates(geo, start.u, start.v))
        throw DomainError("geodesic does not cross the start edge");
    std::vector<Crossing> out;
    FareyEdge e = start;
    auto [w1, w2] = third_vertices(e);
    // the forward triangle has its third vertex on the same arc as the forward endpoint
    FareyPoint w = between(w1.value(), e.u, e.v) == between(geo.forward, e.u, e.v) ? w1 : w2;
    for (std::size_t i = 0; i < max_steps; ++i) {
        Triangle tri{e.u, e.v, w};
        FareyPoint shared = separates(geo, e.u, w) ? e.u : e.v;
        FareyPoint other = shared == e.u ? e.v : e.u;
        FareyEdge exit{shared, w};
        Letter l{side_of(shared, geo), shaded ? triangle_shade(tri) : Shade::None};
        out.push_back({l, tri, exit});
        if (stop && exit.same_as(*stop))
            break;
        auto [n1, n2] = third_vertices(exit);
        w = n1 == other ? n2 : n1;
        e = exit;
    }
    return out;
}

ArcInterval backward_endpoint_interval(const LetterString& letters, int eps)
{
    // (left, right) vertices of the current edge seen from the geodesic, prev is the third
    // vertex of the triangle on the forward side
    FareyPoint one = FareyPoint::of(eps, 1);
    FareyPoint inf = FareyPoint::infinity();
    FareyPoint left = eps > 0 ? inf : one;
    FareyPoint right = eps > 0 ? one : inf;
    FareyPoint prev = FareyPoint::of(2 * eps, 1);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        auto [w1, w2] = third_vertices({left, right});
        FareyPoint w = w1 == prev ? w2 : w1;
        if (it->side == Side::L) {
            prev = right;
            right = w;
        } else {
            prev = left;
            left = w;
        }
    }
    ArcInterval out;
    auto as_rational = [](const FareyPoint& f) { return Rational(f.p, f.q); };
    if (left.is_infinity() || right.is_infinity()) {
        const FareyPoint& fin = left.is_infinity() ? right : left;
        Rational a = as_rational(fin);
        if (!prev.is_infinity() && as_rational(prev) > a)
            out.hi = a;
        else
            out.lo = a;
        return out;
    }
    Rational a = as_rational(left), b = as_rational(right);
    if (b < a)
        std::swap(a, b);
    out.lo = a;
    out.hi = b;
    if (!prev.is_infinity()) {
        Rational c = as_rational(prev);
        out.wraps = a < c && c < b;
    }
    return out;
}

} // namespace cutseq
