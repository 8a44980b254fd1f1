#include "cutseq/dynamics.hpp"

#include "cutseq/errors.hpp"

#include <stdexcept>
#include <unordered_map>

namespace cutseq {

std::pair<QuadraticSurd, QuadraticSurd> roof_factors(const OrientedGeodesic& geo, Parity p)
{
    if (!in_section(geo, p))
        throw DomainError("roof needs a geodesic in the " + to_string(p) + " section, got " + geo.str());
    StepResult st = rho_step(geo, p);
    QuadraticSurd s(long(geo.forward.sign()));
    QuadraticSurd s_next(long(st.next.forward.sign()));
    auto F = [&](const QuadraticSurd& x, const QuadraticSurd& rx) { return rx * rx * (x - s) / (rx - s_next); };
    return {F(geo.forward, st.next.forward), F(geo.backward, st.next.backward)};
}

Real roof(const OrientedGeodesic& geo, Parity p)
{
    auto [ff, fb] = roof_factors(geo, p);
    return log(abs(to_real(ff) / to_real(fb))) / 2;
}

namespace {

CfKind kind_of(Parity p) { return forward_kind(p); }

DigitList rotate(const DigitList& d, std::size_t k)
{
    DigitList out(d.begin() + long(k), d.end());
    out.insert(out.end(), d.begin(), d.begin() + long(k));
    return out;
}

int multiplicity(const DigitList& period)
{
    std::size_t r = period.size();
    for (std::size_t d = 1; d < r; ++d) {
        if (r % d)
            continue;
        bool repeats = true;
        for (std::size_t i = d; i < r && repeats; ++i)
            repeats = period[i] == period[i - d];
        if (repeats && sign_product(DigitList(period.begin(), period.begin() + long(d))) == 1)
            return int(r / d);
    }
    return 1;
}

} // namespace

GeodesicLengthReport closed_length(const DigitList& period, Parity p)
{
    if (period.empty())
        throw AdmissibilityError("empty period");
    for (const auto& d : period)
        validate_digit(kind_of(p), d, false);
    if (sign_product(period) != 1)
        throw AdmissibilityError("sign product of the period is -1; the geodesic closes after the doubled period");

    GeodesicLengthReport rep;
    rep.period = period;
    rep.parity = p;

    OrientedGeodesic geo = closed_geodesic_from_period(period, p, 1);
    UnimodularMatrix m;
    OrientedGeodesic cur = geo;
    for (std::size_t i = 0; i < period.size(); ++i) {
        StepResult st = rho_step(cur, p);
        m = st.rho * m;
        cur = st.next;
    }
    if (!(cur == geo))
        throw std::logic_error("return map did not close up on " + geo.str());
    rep.matrix = m;
    rep.membership = classify_subgroup(m);
    if (!rep.membership.contains(p == Parity::Odd ? SubgroupLabel::GammaOdd : SubgroupLabel::Theta))
        throw std::logic_error("period matrix " + m.str() + " is outside the group");

    Real tr = abs(to_real(m.trace()));
    if (tr <= 2)
        throw DomainError("period matrix " + m.str() + " is not hyperbolic");
    rep.via_trace = 2 * acosh(tr / 2);

    // M'(z) = (cz + d)^-2
    Real c = to_real(m.c()), d = to_real(m.d());
    rep.via_derivative = log(abs((c * to_real(geo.backward) + d) / (c * to_real(geo.forward) + d)));

    Real sum = 0;
    for (std::size_t k = 0; k < period.size(); ++k) {
        OrientedGeodesic g = periodic_pair(rotate(period, k), p, 1);
        sum += log(abs(to_real(g.forward) / to_real(g.backward)));
    }
    rep.via_product = sum;
    rep.length = sum;
    rep.relative_error = abs(rep.via_product - rep.via_trace) / rep.via_trace;
    rep.multiplicity = multiplicity(period);
    return rep;
}

PeriodicityReport purely_periodic(const QuadraticSurd& alpha, Parity p)
{
    if (alpha.is_rational())
        throw DomainError("periodicity test needs an irrational surd");
    if (alpha <= QuadraticSurd(1L))
        throw DomainError("periodicity test needs alpha > 1, got " + alpha.str());
    PeriodicityReport rep;
    rep.alpha = alpha;
    rep.parity = p;

    QuadraticSurd conj = alpha.conjugate();
    if (p == Parity::Odd) {
        // -G < conj <= 2-G; the closed end is G^2 = [[(3,-1)^omega]]
        rep.window = in_gcf_domain(-conj);
    } else {
        rep.window = QuadraticSurd(-1L) < conj && conj < QuadraticSurd(1L);
    }

    DigitStream s = cf_expand(alpha.inverse(), kind_of(p));
    rep.expansion = s.preperiod.empty() && !s.period.empty();
    if (rep.window != rep.expansion)
        throw std::logic_error("window test and expansion disagree for " + alpha.str());
    if (rep.expansion) {
        rep.period = s.period;
        DigitList rev(s.period.rbegin(), s.period.rend());
        rep.reversal = -periodic_value(backward_kind(p), rev) == conj;
    }
    return rep;
}

namespace {

QuadraticSurd above_one(const QuadraticSurd& x)
{
    if (x > QuadraticSurd(1L))
        return x;
    // x + 2n > 1 with n = floor((1 - x)/2) + 1
    Integer n = ((QuadraticSurd(1L) - x) / QuadraticSurd(2L)).floor() + 1;
    return x + QuadraticSurd(Integer(2 * n));
}

std::size_t natural_bound(const QuadraticSurd& x, CfKind kind)
{
    DigitStream s = cf_expand(x.inverse(), kind);
    if (s.period.empty())
        return default_equivalence_depth;
    return s.preperiod.size() + 2 * s.period.size() + 1;
}

} // namespace

EquivalenceResult equivalent(const QuadraticSurd& alpha, const QuadraticSurd& beta, Parity p,
                             std::optional<std::size_t> depth_bound)
{
    if (alpha.is_rational() || beta.is_rational())
        throw DomainError("equivalence search needs irrational arguments");
    EquivalenceResult res;
    res.alpha = above_one(alpha);
    res.beta = above_one(beta);
    CfKind kind = kind_of(p);
    if (res.alpha.D() != res.beta.D()) {
        res.bound = depth_bound.value_or(0);
        return res;   // different fields are never equivalent
    }
    res.bound = depth_bound ? *depth_bound
                            : std::max(natural_bound(res.alpha, kind), natural_bound(res.beta, kind));

    std::unordered_map<QuadraticSurd, std::size_t, SurdHash> seen;
    QuadraticSurd t = res.alpha;
    for (std::size_t r = 0; r <= res.bound; ++r) {
        seen.emplace(t, r);
        t = tail(t, 1, kind);
    }
    t = res.beta;
    for (std::size_t s = 0; s <= res.bound; ++s) {
        if (auto it = seen.find(t); it != seen.end()) {
            res.equivalent = true;
            res.r = it->second;
            res.s = s;
            res.witness = t;
            return res;
        }
        t = tail(t, 1, kind);
    }
    return res;
}

std::optional<Real> birkhoff_step(BirkhoffMap map, const Real& x)
{
    if (x == 0)
        return std::nullopt;
    Real y = 1 / abs(x);
    if (map == BirkhoffMap::TOdd) {
        Real n = floor(y);
        if (n == y)
            return std::nullopt;
        // odd n: digit (n,+1); even n: digit (n+1,-1)
        if (fmod(n, Real(2)) != 0)
            return Real(y - n);
        return Real(n + 1 - y);
    }
    Real z = y - (golden_real() - 2);
    Real b = 2 * floor((z - 1) / 2) + 1;
    Real out = y - b;
    if (z - b == 0 || z - b == 2)
        return std::nullopt;
    return out;
}

BirkhoffResult birkhoff_average(BirkhoffMap map, const Real& lo, const Real& hi, const Real& x0, std::size_t n,
                                unsigned digits)
{
    if (n == 0)
        throw DomainError("birkhoff_average needs N >= 1");
    PrecisionScope scope(digits);
    Real a(lo, digits), b(hi, digits), x(x0, digits);
    if (map == BirkhoffMap::TOdd ? (x <= 0 || x >= 1) : (x <= golden_real() - 2 || x >= golden_real()))
        throw DomainError("seed outside the domain of the map");
    BirkhoffResult res;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a <= x && x <= b)
            ++hits;
        res.steps = i + 1;
        if (i + 1 == n)
            break;
        auto next = birkhoff_step(map, x);
        if (!next) {
            res.aborted = true;
            break;
        }
        x = *next;
    }
    res.average = Real(hits) / Real(res.steps);
    return res;
}

} // namespace cutseq
