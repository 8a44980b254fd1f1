#include "cutseq/subgroup.hpp"

#include "cutseq/errors.hpp"

#include <array>

namespace cutseq {

std::string to_string(SubgroupLabel label)
{
    switch (label) {
    case SubgroupLabel::FullModular: return "FullModular";
    case SubgroupLabel::GammaOdd: return "GammaOdd";
    case SubgroupLabel::Theta: return "Theta";
    case SubgroupLabel::Neither: return "Neither";
    }
    return "?";
}

std::string to_string(CuspClass c)
{
    return c == CuspClass::OrbitOfInfinity ? "OrbitOfInfinity" : "OrbitOfOne";
}

bool SubgroupMembership::contains(SubgroupLabel g) const
{
    switch (g) {
    case SubgroupLabel::FullModular: return full_modular;
    case SubgroupLabel::GammaOdd: return gamma_odd;
    case SubgroupLabel::Theta: return theta;
    case SubgroupLabel::Neither: return !full_modular;
    }
    return false;
}

SubgroupLabel SubgroupMembership::label() const
{
    if (gamma_odd)
        return SubgroupLabel::GammaOdd;
    if (theta)
        return SubgroupLabel::Theta;
    return full_modular ? SubgroupLabel::FullModular : SubgroupLabel::Neither;
}

namespace {

using Residue = std::array<int, 4>;

Residue mod2(const UnimodularMatrix& m)
{
    auto r = [](const Integer& x) { return is_odd(x) ? 1 : 0; };
    return {r(m.a()), r(m.b()), r(m.c()), r(m.d())};
}

bool in_gamma(const Residue& r)
{
    return r == Residue{1, 0, 0, 1} || r == Residue{0, 1, 1, 1} || r == Residue{1, 1, 1, 0};
}

bool in_theta(const Residue& r)
{
    return r == Residue{1, 0, 0, 1} || r == Residue{0, 1, 1, 0};
}

// (num, den) of a rational or of infinity = 1/0
std::pair<Integer, Integer> cusp_coordinates(const ExtendedReal& x)
{
    if (x.is_infinity())
        return {1, 0};
    if (!x.value().is_rational())
        throw DomainError("cusp must be rational or infinity, got " + x.str());
    Rational q = x.value().to_rational();
    return {q.get_num(), q.get_den()};
}

// some matrix with first column (a, c) and det 1
UnimodularMatrix complete_column(const Integer& a, const Integer& c)
{
    Integer g, s, t;
    // s a + t c = 1  ->  (a, -t; c, s)
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    if (g < 0) {
        s = -s;
        t = -t;
    }
    return UnimodularMatrix(a, -t, c, s);
}

} // namespace

SubgroupMembership classify_subgroup(const UnimodularMatrix& m)
{
    Residue r = mod2(m);
    SubgroupMembership out;
    out.gamma_odd = in_gamma(r);
    out.theta = in_theta(r);
    return out;
}

CuspReport cusp_class_gamma(const ExtendedReal& x)
{
    auto [a, c] = cusp_coordinates(x);
    UnimodularMatrix base = complete_column(a, c);
    // shifting by T on the right keeps g(inf) and moves (b, d) by (a, c)
    for (int k = 0; k < 2; ++k) {
        UnimodularMatrix g = k == 0 ? base : base * UnimodularMatrix::T();
        if (classify_subgroup(g).gamma_odd)
            return {CuspClass::OrbitOfInfinity, g};
    }
    throw Error("internal", "no Gamma witness for " + x.str());
}

CuspReport cusp_class_theta(const ExtendedReal& x)
{
    auto [a, c] = cusp_coordinates(x);
    UnimodularMatrix base = complete_column(a, c);
    bool both_odd = is_odd(a) && is_odd(c);
    for (int k = 0; k < 2; ++k) {
        UnimodularMatrix g = k == 0 ? base : base * UnimodularMatrix::T();
        // for the orbit of 1, precompose with ST^-1, which sends 1 to infinity
        if (both_odd)
            g = g * UnimodularMatrix::ST_inv();
        if (classify_subgroup(g).theta)
            return {both_odd ? CuspClass::OrbitOfOne : CuspClass::OrbitOfInfinity, g};
    }
    throw Error("internal", "no Theta witness for " + x.str());
}

} // namespace cutseq
