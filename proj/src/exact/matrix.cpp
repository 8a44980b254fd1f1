#include "cutseq/matrix.hpp"

#include "cutseq/errors.hpp"

namespace cutseq {

ExtendedReal Matrix2::apply(const ExtendedReal& z) const
{
    if (z.is_infinity()) {
        if (c == 0)
            return ExtendedReal::infinity();
        return ExtendedReal(make_rational(a, c));
    }
    const QuadraticSurd& x = z.value();
    QuadraticSurd den = QuadraticSurd(c) * x + QuadraticSurd(d);
    if (den.sign() == 0)
        return ExtendedReal::infinity();
    return ExtendedReal((QuadraticSurd(a) * x + QuadraticSurd(b)) / den);
}

QuadraticSurd Matrix2::apply_finite(const QuadraticSurd& z) const
{
    ExtendedReal w = apply(ExtendedReal(z));
    if (w.is_infinity())
        throw DomainError(z.str() + " is the pole of " + str());
    return w.value();
}

Matrix2 Matrix2::operator*(const Matrix2& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string Matrix2::str() const
{
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() +
           "]]";
}

UnimodularMatrix::UnimodularMatrix(Integer a, Integer b, Integer c, Integer d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)}
{
    if (m_.det() != 1)
        throw DomainError("determinant of " + m_.str() + " is " + m_.det().get_str() + ", not 1");
    canonicalize();
}

UnimodularMatrix::UnimodularMatrix(const Matrix2& m) : UnimodularMatrix(m.a, m.b, m.c, m.d) {}

void UnimodularMatrix::canonicalize()
{
    if (m_.c < 0 || (m_.c == 0 && m_.d < 0)) {
        m_.a = -m_.a;
        m_.b = -m_.b;
        m_.c = -m_.c;
        m_.d = -m_.d;
    }
}

UnimodularMatrix UnimodularMatrix::S() { return {0, -1, 1, 1}; }
UnimodularMatrix UnimodularMatrix::ST_inv() { return {0, 1, -1, 1}; }
UnimodularMatrix UnimodularMatrix::T() { return {1, 1, 0, 1}; }
UnimodularMatrix UnimodularMatrix::T2() { return {1, 2, 0, 1}; }
UnimodularMatrix UnimodularMatrix::theta_S() { return {0, -1, 1, 0}; }

UnimodularMatrix UnimodularMatrix::inverse() const
{
    return {m_.d, -m_.b, -m_.c, m_.a};
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const
{
    return UnimodularMatrix(m_ * o.m_);
}

ExtendedReal mobius_apply(const UnimodularMatrix& m, const ExtendedReal& z)
{
    return m.apply(z);
}

} // namespace cutseq
