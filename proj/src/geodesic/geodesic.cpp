#include "cutseq/geodesic.hpp"

#include "cutseq/errors.hpp"

#include <algorithm>

namespace cutseq {

namespace {

const QuadraticSurd one(1L);

void require_irrational(const OrientedGeodesic& geo)
{
    if (geo.forward.is_rational() || geo.backward.is_rational())
        throw DomainError("geodesic endpoints must be irrational: " + geo.str());
    if (geo.forward == geo.backward)
        throw DomainError("geodesic endpoints coincide: " + geo.str());
}

void require_section(const OrientedGeodesic& geo, Parity p)
{
    if (!in_section(geo, p))
        throw DomainError("geodesic " + geo.str() + " is not in the " + to_string(p) + " section");
}

CaseTag classify(const QuadraticSurd& forward, Parity p)
{
    int s = forward.sign();
    SignedDigit d = leading_step(forward_kind(p), forward.abs()).digit;
    return tag_for_digit(p, s, d);
}

Letter lit(Side s, Shade h) { return {s, h}; }

} // namespace

std::string to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

Parity parity_from_string(const std::string& s)
{
    if (s == "odd")
        return Parity::Odd;
    if (s == "even")
        return Parity::Even;
    throw DomainError("case must be odd or even, got " + s);
}

std::string OrientedGeodesic::str() const
{
    return "(" + forward.str() + ", " + backward.str() + ")";
}

OrientedGeodesic apply(const UnimodularMatrix& g, const OrientedGeodesic& geo)
{
    return {g.matrix().apply_finite(geo.forward), g.matrix().apply_finite(geo.backward)};
}

char to_char(CaseLetter c) { return "ABCD"[int(c)]; }

std::string CaseTag::str() const { return std::string(1, to_char(letter)) + k.get_str(); }

LetterString template_word(Parity p, const CaseTag& t)
{
    if (t.k < 1)
        throw DomainError("case index k must be >= 1");
    long k = t.k.get_si();
    LetterString w;
    if (p == Parity::Odd) {
        const Letter lL = lit(Side::L, Shade::Light), dL = lit(Side::L, Shade::Dark);
        const Letter lR = lit(Side::R, Shade::Light), dR = lit(Side::R, Shade::Dark);
        bool left = t.letter == CaseLetter::A || t.letter == CaseLetter::B;
        for (long i = 1; i < k; ++i) {
            w.push_back(left ? lL : dR);
            w.push_back(left ? dL : lR);
        }
        switch (t.letter) {
        case CaseLetter::A: w.push_back(lL); w.push_back(dR); break;
        case CaseLetter::B: w.push_back(lR); break;
        case CaseLetter::C: w.push_back(dR); w.push_back(lL); break;
        case CaseLetter::D: w.push_back(dL); break;
        }
        return w;
    }
    bool left = t.letter == CaseLetter::A || t.letter == CaseLetter::B;
    long run = (t.letter == CaseLetter::A || t.letter == CaseLetter::C) ? 2 * k - 2 : 2 * k - 1;
    Letter first = lit(left ? Side::L : Side::R, Shade::None);
    Letter last = lit(left ? Side::R : Side::L, Shade::None);
    w.assign(std::size_t(run), first);
    w.push_back(last);
    return w;
}

SignedDigit template_digit(Parity p, const CaseTag& t)
{
    bool minus = t.letter == CaseLetter::A || t.letter == CaseLetter::C;
    if (p == Parity::Odd)
        return minus ? SignedDigit{2 * t.k + 1, -1} : SignedDigit{2 * t.k - 1, 1};
    return {2 * t.k, minus ? -1 : 1};
}

CaseTag tag_for_digit(Parity p, int sign, const SignedDigit& d)
{
    validate_digit(forward_kind(p), d, false);
    bool plus = sign > 0;
    CaseTag t;
    if (d.eps < 0)
        t.letter = plus ? CaseLetter::A : CaseLetter::C;
    else
        t.letter = plus ? CaseLetter::B : CaseLetter::D;
    if (p == Parity::Odd)
        t.k = d.eps < 0 ? Integer((d.a - 1) / 2) : Integer((d.a + 1) / 2);
    else
        t.k = d.a / 2;
    return t;
}

int successor_sign(CaseLetter c)
{
    // the forward endpoint changes sign exactly when eps1 = +1
    return c == CaseLetter::A || c == CaseLetter::D ? 1 : -1;
}

bool in_section(const OrientedGeodesic& geo, Parity p)
{
    const QuadraticSurd& x = geo.forward;
    const QuadraticSurd& y = geo.backward;
    if (x.is_rational() || y.is_rational())
        return false;
    if (p == Parity::Even)
        return x.abs() > one && y.abs() < one;
    if (x > one)
        return in_gcf_domain(-y);
    if (x < -one)
        return in_gcf_domain(y);
    return false;
}

UnimodularMatrix rho_matrix(const QuadraticSurd& forward, Parity p)
{
    if (forward.abs() <= one)
        throw DomainError("return map needs |forward| > 1, got " + forward.str());
    int s = forward.sign();
    Integer a = leading_step(forward_kind(p), forward.abs()).digit.a;
    return UnimodularMatrix(0, 1, -1, s * a);
}

StepResult rho_step(const OrientedGeodesic& geo, Parity p)
{
    require_section(geo, p);
    CaseTag t = classify(geo.forward, p);
    UnimodularMatrix r = rho_matrix(geo.forward, p);
    return {apply(r, geo), {t, template_word(p, t), template_digit(p, t)}, r};
}

StepResult rho_inverse_step(const OrientedGeodesic& geo, Parity p)
{
    require_section(geo, p);
    int eps = geo.forward.sign();
    SignedDigit d = cf_step(backward_kind(p), -QuadraticSurd(long(eps)) * geo.backward).digit;
    int prev_sign = -d.eps * eps;
    // z -> prev_sign a0 - 1/z
    UnimodularMatrix inv(prev_sign * d.a, -1, 1, 0);
    OrientedGeodesic prev = apply(inv, geo);
    CaseTag t = tag_for_digit(p, prev_sign, d);
    return {prev, {t, template_word(p, t), d}, inv};
}

Lift lift_to_section(const OrientedGeodesic& geo, Parity p, int depth)
{
    require_irrational(geo);
    UnimodularMatrix g;
    OrientedGeodesic cur = geo;
    if (cur.forward.abs() < one) {
        UnimodularMatrix m;
        if (p == Parity::Even)
            m = UnimodularMatrix::theta_S();
        else
            m = cur.forward.sign() > 0 ? UnimodularMatrix::ST_inv() : UnimodularMatrix::S();
        cur = apply(m, cur);
        g = m;
    }
    for (int i = 0; i < depth; ++i) {
        if (in_section(cur, p))
            return {g, cur};
        UnimodularMatrix r = rho_matrix(cur.forward, p);
        cur = apply(r, cur);
        g = r * g;
    }
    if (in_section(cur, p))
        return {g, cur};
    throw SearchExhausted("not lifted within depth " + std::to_string(depth) + ": " + geo.str());
}

ExtensionPoint conjugation_J(const OrientedGeodesic& geo, Parity p)
{
    require_section(geo, p);
    int s = geo.forward.sign();
    return {geo.forward.abs().inverse(), -QuadraticSurd(long(s)) * geo.backward, s};
}

OrientedGeodesic conjugation_J_inv(const ExtensionPoint& e, Parity p)
{
    QuadraticSurd s(long(e.eps));
    OrientedGeodesic geo{s / e.x, -s * e.y};
    require_section(geo, p);
    return geo;
}

LetterString CuttingSequence::backward_letters() const
{
    LetterString out;
    for (auto it = backward.rbegin(); it != backward.rend(); ++it)
        out.insert(out.end(), it->word.begin(), it->word.end());
    return out;
}

LetterString CuttingSequence::forward_letters() const
{
    LetterString out;
    for (const auto& s : forward)
        out.insert(out.end(), s.word.begin(), s.word.end());
    return out;
}

CuttingSequence cutting_sequence(const OrientedGeodesic& geo, std::size_t n_forward, Parity p,
                                 std::size_t n_backward)
{
    Lift lift = lift_to_section(geo, p);
    CuttingSequence cs;
    cs.lift = lift.g;
    cs.base = lift.geodesic;
    if (p == Parity::Odd)
        cs.shade_convention = "lifted base cell; triangle (-1,0,inf) light; segments after xi start "
                              "light when gamma_inf > 1 and dark when gamma_inf < -1";
    else
        cs.shade_convention = "unshaded";
    OrientedGeodesic cur = lift.geodesic;
    for (std::size_t i = 0; i < n_forward; ++i) {
        StepResult st = rho_step(cur, p);
        cs.forward.push_back(std::move(st.segment));
        cur = st.next;
    }
    cur = lift.geodesic;
    for (std::size_t i = 0; i < n_backward; ++i) {
        StepResult st = rho_inverse_step(cur, p);
        cs.backward.push_back(std::move(st.segment));
        cur = st.next;
    }
    return cs;
}

int sign_product(const DigitList& period)
{
    int s = 1;
    for (const auto& d : period)
        s *= -d.eps;
    return s;
}

OrientedGeodesic periodic_pair(const DigitList& period, Parity p, int eps)
{
    if (period.empty())
        throw DomainError("empty period");
    if (eps != 1 && eps != -1)
        throw DomainError("eps must be +1 or -1");
    // (2,-1)^omega is the cusp 1
    if (p == Parity::Even && std::all_of(period.begin(), period.end(), [](const SignedDigit& d) { return d.a == 2 && d.eps == -1; }))
        throw AdmissibilityError("a period of (2,-1) digits only is parabolic");
    DigitStream fwd;
    fwd.kind = forward_kind(p);
    fwd.leading = period.front();
    fwd.period.assign(period.begin() + 1, period.end());
    fwd.period.push_back(period.front());
    DigitStream bwd;
    bwd.kind = backward_kind(p);
    bwd.period.assign(period.rbegin(), period.rend());
    QuadraticSurd e{long(eps)};
    return {e * cf_evaluate(fwd), -e * cf_evaluate(bwd)};
}

OrientedGeodesic closed_geodesic_from_period(const DigitList& period, Parity p, int eps)
{
    if (sign_product(period) != 1)
        throw AdmissibilityError("odd sign product - not closed; double the period");
    return periodic_pair(period, p, eps);
}

} // namespace cutseq
