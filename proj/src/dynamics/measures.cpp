#include "cutseq/measures.hpp"

#include "cutseq/errors.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cutseq {

namespace {

struct Names {
    const char* measure;
    const char* map;
};

constexpr Names names[] = {
    {"mu_o", "T_o"}, {"nu_o", "tau_o"}, {"mu_bar_o", "T_bar_o"},
    {"mu_e", "T_e"}, {"nu_e", "tau_e"}, {"mu_bar_e", "T_bar_e"},
};

bool odd(MeasureName m) { return m == MeasureName::MuOdd || m == MeasureName::NuOdd || m == MeasureName::MuBarOdd; }

// y-range of the natural extension, also the domain of the dual map
Interval dual_domain(bool is_odd)
{
    Real g = golden_real();
    if (is_odd)
        return {g - 2, g};
    return {Real(-1), Real(1)};
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw DomainError(what);
}

void check_interval(MeasureName m, const Interval& r)
{
    require(r.lo <= r.hi, "empty interval");
    switch (m) {
    case MeasureName::MuOdd: require(r.lo >= 0 && r.hi <= 1, "mu_o lives on [0,1]"); break;
    case MeasureName::MuEven: require(r.lo >= 0 && r.hi < 1, "mu_e needs a region in [0,1), away from 1"); break;
    case MeasureName::NuOdd: {
        Interval d = dual_domain(true);
        require(r.lo >= d.lo && r.hi <= d.hi, "nu_o lives on [G-2,G]");
        break;
    }
    case MeasureName::NuEven: require(r.lo > -1 && r.hi <= 1, "nu_e needs a region in (-1,1], away from -1"); break;
    default: throw DomainError(to_string(m) + " is two-dimensional");
    }
}

void check_rect(MeasureName m, const Rect& r)
{
    require(m == MeasureName::MuBarOdd || m == MeasureName::MuBarEven, to_string(m) + " is one-dimensional");
    require(r.x.lo <= r.x.hi && r.y.lo <= r.y.hi, "empty rectangle");
    require(r.x.lo >= 0 && r.x.hi <= 1, "x outside [0,1]");
    Interval d = dual_domain(m == MeasureName::MuBarOdd);
    require(r.y.lo >= d.lo && r.y.hi <= d.hi, "y outside the dual domain");
    require(1 + r.x.hi * r.y.lo > 0, "rectangle touches the singular corner");
}

} // namespace

std::string to_string(MeasureName m) { return names[int(m)].measure; }
std::string to_string(MapName m) { return names[int(m)].map; }

MeasureName measure_from_string(const std::string& s)
{
    for (int i = 0; i < 6; ++i)
        if (s == names[i].measure)
            return MeasureName(i);
    throw DomainError("unknown measure " + s);
}

MapName map_from_string(const std::string& s)
{
    for (int i = 0; i < 6; ++i)
        if (s == names[i].map)
            return MapName(i);
    throw DomainError("unknown map " + s);
}

MapName natural_map(MeasureName m) { return MapName(int(m)); }

bool is_two_dimensional(MeasureName m) { return m == MeasureName::MuBarOdd || m == MeasureName::MuBarEven; }

Real mass_ratio(MeasureName m, const Interval& r)
{
    check_interval(m, r);
    Real g = golden_real();
    switch (m) {
    case MeasureName::MuOdd: return (r.hi + g - 1) * (g + 1 - r.lo) / ((r.lo + g - 1) * (g + 1 - r.hi));
    case MeasureName::MuEven: return (1 + r.hi) * (1 - r.lo) / ((1 - r.hi) * (1 + r.lo));
    default: return (1 + r.hi) / (1 + r.lo);
    }
}

Real mass_ratio(MeasureName m, const Rect& r)
{
    check_rect(m, r);
    const Real &a = r.x.lo, &b = r.x.hi, &c = r.y.lo, &d = r.y.hi;
    return (1 + d * b) * (1 + c * a) / ((1 + d * a) * (1 + c * b));
}

Real measure_mass(const MeasureSpec& m, const Interval& r)
{
    Real v = log(mass_ratio(m.name, r));
    if (m.normalized) {
        require(m.name == MeasureName::MuOdd || m.name == MeasureName::NuOdd, "only mu_o and nu_o normalise");
        v /= 3 * log(golden_real());
    }
    return v;
}

Real measure_mass(const MeasureSpec& m, const Rect& r)
{
    Real v = log(mass_ratio(m.name, r));
    if (m.normalized) {
        require(m.name == MeasureName::MuBarOdd, "only mu_bar_o normalises");
        v /= 3 * log(golden_real());
    }
    return v;
}

namespace {

struct Branch {
    long a;
    int eps;
};

// branch k >= 1 of a family; odd maps exclude (1,-1)
Branch branch(bool is_odd, int eps, long k)
{
    if (is_odd)
        return {eps > 0 ? 2 * k - 1 : 2 * k + 1, eps};
    return {2 * k, eps};
}

Interval sorted(Real u, Real v)
{
    if (v < u)
        std::swap(u, v);
    return {u, v};
}

// term(k) is the ratio whose log is the mass of the k-th preimage piece (nullopt: empty)
using Term = std::function<std::optional<Real>(long)>;

// sum of log(term(k)) over k >= 1; terms from `stable` on are smooth in k
Real branch_sum(const Term& term, long stable, bool tail_vanishes)
{
    Real head = 1;
    for (long k = 1; k < stable; ++k)
        if (auto t = term(k))
            head *= *t;
    Real total = log(head);
    if (tail_vanishes)
        return total;

    constexpr int levels = 8;
    long n0 = std::max<long>(16, 2 * stable);
    std::vector<Real> partial;
    Real prod = 1;
    long k = stable;
    for (int i = 0; i < levels; ++i) {
        long upto = n0 << i;
        for (; k < upto; ++k)
            if (auto t = term(k))
                prod *= *t;
        partial.push_back(log(prod));
    }
    // Richardson in h = 1/N with N doubling
    std::vector<std::vector<Real>> r(levels);
    for (int i = 0; i < levels; ++i) {
        r[i].push_back(partial[i]);
        for (int m = 1; m <= i; ++m) {
            Real f = Real(1) / ((1L << m) - 1);
            r[i].push_back(r[i][m - 1] + (r[i][m - 1] - r[i - 1][m - 1]) * f);
        }
    }
    return total + r[levels - 1][levels - 1];
}

bool map_matches(MeasureName m, MapName map)
{
    return int(m) == int(map);
}

InvarianceReport finish(Real region, Real pre, double tol, long exact)
{
    InvarianceReport rep;
    rep.region_mass = region;
    rep.preimage_mass = pre;
    rep.difference = abs(pre - region);
    rep.tolerance = tol;
    rep.pass = rep.difference <= tol;
    rep.branches_exact = exact;
    return rep;
}

} // namespace

InvarianceReport check_invariance(MeasureName m, MapName map, const Interval& region, double tol)
{
    require(!is_two_dimensional(m), "use the rectangle form for " + to_string(m));
    require(map_matches(m, map), to_string(m) + " is not checked against " + to_string(map));
    check_interval(m, region);
    bool is_odd = odd(m);
    bool dual = m == MeasureName::NuOdd || m == MeasureName::NuEven;
    Real pre = 0;
    for (int eps : {1, -1}) {
        Term term = [&](long k) -> std::optional<Real> {
            Branch b = branch(is_odd, eps, k);
            auto inv = [&](const Real& t) -> Real {
                return dual ? Real(b.eps / (b.a + t)) : Real(1 / (b.a + b.eps * t));
            };
            return mass_ratio(m, sorted(inv(region.lo), inv(region.hi)));
        };
        pre += branch_sum(term, 1, false);
    }
    return finish(log(mass_ratio(m, region)), pre, tol, 0);
}

InvarianceReport check_invariance(MeasureName m, MapName map, const Rect& region, double tol)
{
    require(is_two_dimensional(m), "use the interval form for " + to_string(m));
    require(map_matches(m, map), to_string(m) + " is not checked against " + to_string(map));
    check_rect(m, region);
    bool is_odd = m == MeasureName::MuBarOdd;
    Interval ydom = dual_domain(is_odd);
    const Real &c = region.y.lo, &d = region.y.hi;
    Real pre = 0;
    long exact = 0;
    for (int eps : {1, -1}) {
        // V_k = eps/(a_k + ydom) shrinks to 0 from the eps side
        auto image = [&](long k) {
            Branch b = branch(is_odd, eps, k);
            return sorted(Real(eps / (b.a + ydom.lo)), Real(eps / (b.a + ydom.hi)));
        };
        Term term = [&](long k) -> std::optional<Real> {
            Branch b = branch(is_odd, eps, k);
            Interval v = image(k);
            Real lo = max(v.lo, c), hi = min(v.hi, d);
            if (lo >= hi)
                return std::nullopt;
            Interval x = sorted(Real(1 / (b.a + b.eps * region.x.lo)), Real(1 / (b.a + b.eps * region.x.hi)));
            // y = eps/v - a
            Interval y = sorted(Real(eps / lo - b.a), Real(eps / hi - b.a));
            y.lo = max(y.lo, ydom.lo);
            y.hi = min(y.hi, ydom.hi);
            return mass_ratio(m, Rect{x, y});
        };
        bool zero_inside = c < 0 && d > 0;
        bool reaches = eps > 0 ? d > 0 : c < 0;
        long k = 1;
        bool tail_vanishes = false;
        for (;; ++k) {
            Interval v = image(k);
            if (zero_inside && v.lo >= c && v.hi <= d)
                break;
            if (!zero_inside && (!reaches || (eps > 0 ? v.hi <= c : v.lo >= d))) {
                tail_vanishes = true;
                break;
            }
            if (k > 10000000)
                throw DomainError("rectangle edge too close to 0 for the branch sum");
        }
        exact += k - 1;
        pre += branch_sum(term, k, tail_vanishes);
    }
    return finish(log(mass_ratio(m, region)), pre, tol, exact);
}

} // namespace cutseq
