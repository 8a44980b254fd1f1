#include "cutseq/natural_extension.hpp"

#include "cutseq/errors.hpp"

namespace cutseq {

namespace {

void require_irrational(const ExtensionPoint& p)
{
    if (p.x.is_rational() || p.y.is_rational())
        throw DomainError("natural extension needs irrational coordinates");
    if (p.eps != 1 && p.eps != -1)
        throw DomainError("eps must be +1 or -1");
}

ExtensionPoint forward(const ExtensionPoint& p, Step (*step)(const QuadraticSurd&))
{
    require_irrational(p);
    Step st = step(p.x);
    QuadraticSurd y = QuadraticSurd(long(st.digit.eps)) / (QuadraticSurd(st.digit.a) + p.y);
    return {st.rest, y, -st.digit.eps * p.eps};
}

ExtensionPoint backward(const ExtensionPoint& p, Step (*dual_step)(const QuadraticSurd&))
{
    require_irrational(p);
    Step st = dual_step(p.y);
    QuadraticSurd x = (QuadraticSurd(st.digit.a) + QuadraticSurd(long(st.digit.eps)) * p.x).inverse();
    return {x, st.rest, -st.digit.eps * p.eps};
}

} // namespace

ExtensionPoint natural_extension_odd(const ExtensionPoint& p)
{
    if (!in_gcf_domain(p.y))
        throw DomainError("y outside I_G");
    return forward(p, ocf_step);
}

ExtensionPoint natural_extension_odd_inv(const ExtensionPoint& p)
{
    if (p.x.sign() <= 0 || p.x >= QuadraticSurd(1L))
        throw DomainError("x outside (0,1)");
    return backward(p, gcf_step);
}

ExtensionPoint natural_extension_even(const ExtensionPoint& p)
{
    if (!in_eecf_domain(p.y))
        throw DomainError("y outside (-1,1)");
    return forward(p, ecf_step);
}

ExtensionPoint natural_extension_even_inv(const ExtensionPoint& p)
{
    if (p.x.sign() <= 0 || p.x >= QuadraticSurd(1L))
        throw DomainError("x outside (0,1)");
    return backward(p, eecf_step);
}

std::pair<QuadraticSurd, QuadraticSurd> inverse_via_rho(const QuadraticSurd& u, const QuadraticSurd& v)
{
    if (u.is_rational() || v.is_rational())
        throw DomainError("inverse_via_rho needs irrational coordinates");
    if (u.sign() <= 0 || u >= QuadraticSurd(1L))
        throw DomainError("u outside (0,1)");
    SignedDigit d = gcf_step(v).digit;
    Matrix2 r{-d.eps * d.a, -1, 1, 0};   // z -> -e0 b0 - 1/z
    QuadraticSurd s(long(v.sign()));
    QuadraticSurd first = -s / r.apply_finite(u.inverse());
    QuadraticSurd second = s * r.apply_finite(-v);
    return {first, second};
}

} // namespace cutseq
