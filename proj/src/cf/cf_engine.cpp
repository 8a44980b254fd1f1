#include "cutseq/cf_engine.hpp"

#include "cutseq/errors.hpp"
#include "cutseq/squarefree.hpp"

#include <unordered_map>

namespace cutseq {

const QuadraticSurd& golden_ratio()
{
    static const QuadraticSurd g = QuadraticSurd::golden();
    return g;
}

bool in_gcf_domain(const QuadraticSurd& y)
{
    const QuadraticSurd& g = golden_ratio();
    return y >= g - QuadraticSurd(2L) && y < g;
}

bool in_eecf_domain(const QuadraticSurd& y)
{
    return y > QuadraticSurd(-1L) && y < QuadraticSurd(1L);
}

namespace {

void require_unit_interval(const char* what, const QuadraticSurd& x)
{
    if (x.sign() <= 0 || x >= QuadraticSurd(1L))
        throw DomainError(std::string(what) + " needs 0 < x < 1, got " + x.str());
}

const QuadraticSurd zero;

// digit with the "odd" or "even" parity rule: the nearest admissible integer above or
// below 1/x (or x), rest measured from it
Step parity_step(const QuadraticSurd& y, bool want_odd, const char* what)
{
    if (y.is_integer()) {
        const Integer& m = y.p();
        if (is_odd(m) == want_odd)
            return {{m, 1}, zero};
        throw BoundaryError(std::string("boundary point: ") + what + " of " + y.str() +
                            " is an integer of the wrong parity");
    }
    Integer n = y.floor();
    if (is_odd(n) == want_odd)
        return {{n, 1}, y - QuadraticSurd(n)};
    return {{n + 1, -1}, QuadraticSurd(Integer(n + 1)) - y};
}

} // namespace

Step ocf_step(const QuadraticSurd& x)
{
    require_unit_interval("ocf_step", x);
    return parity_step(x.inverse(), true, "1/x");
}

Step ecf_step(const QuadraticSurd& x)
{
    require_unit_interval("ecf_step", x);
    return parity_step(x.inverse(), false, "1/x");
}

Step rcf_step(const QuadraticSurd& x)
{
    require_unit_interval("rcf_step", x);
    QuadraticSurd y = x.inverse();
    Integer n = y.floor();
    return {{n, 1}, y - QuadraticSurd(n)};
}

Step gcf_step(const QuadraticSurd& y)
{
    if (y.sign() == 0 || !in_gcf_domain(y))
        throw DomainError("gcf_step needs y in [G-2, G), y != 0, got " + y.str());
    const QuadraticSurd& g = golden_ratio();
    int eps = y.sign();
    QuadraticSurd z = y.abs().inverse();
    // smallest m with m >= z - G
    Integer m = z.floor() - 2;
    while (QuadraticSurd(m) + g < z)
        ++m;
    // on a tie (z - m = G) the image G is outside the half-open domain, G-2 is inside
    bool exact = QuadraticSurd(m) + g == z;
    Integer b = is_odd(m) ? (exact ? Integer(m + 2) : m) : Integer(m + 1);
    return {{b, eps}, z - QuadraticSurd(b)};
}

Step eecf_step(const QuadraticSurd& y)
{
    if (y.sign() == 0 || !in_eecf_domain(y))
        throw DomainError("eecf_step needs y in (-1, 1), y != 0, got " + y.str());
    int eps = y.sign();
    QuadraticSurd z = y.abs().inverse();
    if (z.is_integer()) {
        if (is_odd(z.p()))
            throw BoundaryError("boundary point: 1/|y| = " + z.str() + " is odd");
        return {{z.p(), eps}, zero};
    }
    Integer n = z.floor();
    Integer b = is_even(n) ? n : Integer(n + 1);
    return {{b, eps}, z - QuadraticSurd(b)};
}

Step cf_step(CfKind kind, const QuadraticSurd& x)
{
    switch (kind) {
    case CfKind::RCF: return rcf_step(x);
    case CfKind::OCF: return ocf_step(x);
    case CfKind::GCF: return gcf_step(x);
    case CfKind::ECF: return ecf_step(x);
    case CfKind::EECF: return eecf_step(x);
    }
    throw DomainError("unknown kind");
}

Step leading_step(CfKind kind, const QuadraticSurd& x)
{
    if (x < QuadraticSurd(kind == CfKind::RCF ? 0L : 1L))
        throw DomainError("leading digit needs x >= 1, got " + x.str());
    switch (kind) {
    case CfKind::RCF: {
        Integer n = x.floor();
        return {{n, 1}, x - QuadraticSurd(n)};
    }
    case CfKind::OCF: return parity_step(x, true, "x");
    case CfKind::ECF: return parity_step(x, false, "x");
    default: throw DomainError(to_string(kind) + " has no leading digit");
    }
}

DigitStream cf_expand(const QuadraticSurd& value, CfKind kind, std::size_t max_depth)
{
    DigitStream s;
    s.kind = kind;
    QuadraticSurd x = value;
    if (is_dual_kind(kind)) {
        bool ok = kind == CfKind::GCF ? in_gcf_domain(x) : in_eecf_domain(x);
        if (!ok)
            throw DomainError(to_string(kind) + " expansion outside its domain: " + x.str());
    } else {
        if (x.sign() < 0) {
            s.sign = -1;
            x = -x;
        }
        if (kind == CfKind::RCF || x >= QuadraticSurd(1L)) {
            Step st = leading_step(kind, x);
            s.leading = st.digit;
            x = st.rest;
        }
    }

    DigitList digits;
    std::unordered_map<QuadraticSurd, std::size_t, SurdHash> seen;
    for (std::size_t depth = 0;; ++depth) {
        if (x.sign() == 0) {
            s.preperiod = std::move(digits);
            return s;
        }
        auto [it, fresh] = seen.emplace(x, digits.size());
        if (!fresh) {
            s.preperiod.assign(digits.begin(), digits.begin() + it->second);
            s.period.assign(digits.begin() + it->second, digits.end());
            return s;
        }
        if (depth == max_depth)
            break;
        Step st = cf_step(kind, x);
        digits.push_back(st.digit);
        x = st.rest;
    }
    s.preperiod = std::move(digits);
    s.truncated = true;
    return s;
}

QuadraticSurd periodic_value(CfKind kind, const DigitList& period)
{
    if (period.empty())
        return zero;
    Matrix2 p;
    for (const auto& d : period)
        p = p * digit_matrix(kind, d);
    if (p.c == 0)
        throw AdmissibilityError("degenerate period matrix " + p.str());
    // c w^2 + (d - a) w - b = 0
    Integer disc = (p.d - p.a) * (p.d - p.a) + 4 * p.b * p.c;
    if (disc < 0)
        throw AdmissibilityError("period matrix " + p.str() + " has no real fixed point");
    QuadraticSurd best;
    bool found = false;
    for (int s : {1, -1}) {
        QuadraticSurd w = QuadraticSurd::make(p.a - p.d, s, disc, 2 * p.c);
        QuadraticSurd slope = QuadraticSurd(p.c) * w + QuadraticSurd(p.d);
        // attracting root, or the double root in the parabolic case
        if (slope.abs() >= QuadraticSurd(1L) && (!found || slope.abs() > QuadraticSurd(1L))) {
            best = w;
            found = true;
        }
    }
    if (!found)
        throw AdmissibilityError("period " + p.str() + " has no attracting fixed point");
    return best;
}

QuadraticSurd cf_evaluate(const DigitStream& s)
{
    if (s.truncated)
        throw DomainError("truncated stream has no exact value");
    validate(s);
    QuadraticSurd t = periodic_value(s.kind, s.period);
    bool in_domain;
    switch (s.kind) {
    case CfKind::GCF: {
        const QuadraticSurd& g = golden_ratio();
        in_domain = t >= g - QuadraticSurd(2L) && t <= g;
        break;
    }
    case CfKind::EECF: in_domain = t >= QuadraticSurd(-1L) && t <= QuadraticSurd(1L); break;
    default: in_domain = t.sign() >= 0 && t <= QuadraticSurd(1L); break;
    }
    if (!in_domain)
        throw AdmissibilityError("periodic tail " + t.str() + " lies outside the " + to_string(s.kind) + " domain");

    Matrix2 m;
    if (s.leading)
        m = leading_matrix(s.kind, *s.leading);
    for (const auto& d : s.preperiod)
        m = m * digit_matrix(s.kind, d);
    QuadraticSurd v = m.apply_finite(t);
    return s.sign < 0 ? -v : v;
}

QuadraticSurd tail(const QuadraticSurd& x, std::size_t m, CfKind kind)
{
    if (kind != CfKind::OCF && kind != CfKind::ECF)
        throw DomainError("tail is defined for ocf and ecf");
    if (x.is_rational())
        throw DomainError("tail needs an irrational argument");
    if (x.abs() <= QuadraticSurd(1L))
        throw DomainError("tail needs |x| > 1, got " + x.str());
    QuadraticSurd t = x;
    for (std::size_t i = 0; i < m; ++i) {
        int s = t.sign();
        Integer a = leading_step(kind, t.abs()).digit.a;
        t = (QuadraticSurd(Integer(s * a)) - t).inverse();
    }
    return t;
}

} // namespace cutseq
