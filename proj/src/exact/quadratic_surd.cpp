#include "cutseq/quadratic_surd.hpp"

#include "cutseq/errors.hpp"
#include "cutseq/squarefree.hpp"

#include <functional>

namespace cutseq {

QuadraticSurd::QuadraticSurd(const Rational& v)
    : p_(v.get_num()), q_(0), r_(v.get_den()), d_(0)
{
}

QuadraticSurd QuadraticSurd::make(const Integer& p, const Integer& q, const Integer& n,
                                  const Integer& r)
{
    if (r == 0)
        throw DomainError("zero denominator");
    if (n < 0)
        throw DomainError("negative radicand " + n.get_str());
    if (q == 0 || n == 0)
        return from_canonical(p, 0, r, 0);
    SquareDecomposition sd = square_decompose(n);
    if (sd.kernel == 1)
        return from_canonical(p + q * sd.root, 0, r, 0);
    return from_canonical(p, q * sd.root, r, sd.kernel);
}

QuadraticSurd QuadraticSurd::from_canonical(Integer p, Integer q, Integer r, Integer d)
{
    QuadraticSurd s;
    s.p_ = std::move(p);
    s.q_ = std::move(q);
    s.r_ = std::move(r);
    s.d_ = std::move(d);
    s.normalize();
    return s;
}

QuadraticSurd QuadraticSurd::golden()
{
    return from_canonical(1, 1, 2, 5);
}

void QuadraticSurd::normalize()
{
    if (r_ == 0)
        throw DomainError("zero denominator");
    if (q_ == 0)
        d_ = 0;
    else if (d_ < 2)
        throw DomainError("radicand must be square-free and >= 2");
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g != 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

Rational QuadraticSurd::to_rational() const
{
    if (!is_rational())
        throw DomainError("irrational value " + str() + " has no rational form");
    return make_rational(p_, r_);
}

QuadraticSurd QuadraticSurd::conjugate() const
{
    if (is_rational())
        throw DomainError("no conjugate of a rational");
    return from_canonical(p_, -q_, r_, d_);
}

int sign_of(const Integer& a, const Integer& b, const Integer& D)
{
    int sa = sgn(a);
    if (b == 0 || D == 0)
        return sa;
    int sb = sgn(b);
    if (sa == 0 || sa == sb)
        return sb;
    // opposite signs: whichever square dominates wins
    Integer lhs = a * a, rhs = b * b * D;
    return lhs > rhs ? sa : sb;
}

int QuadraticSurd::sign() const
{
    return sign_of(p_, q_, d_);
}

Integer QuadraticSurd::floor() const
{
    if (is_rational())
        return floor_div(p_, r_);
    // q sqrt(D) lies strictly between lo and lo + 1
    Integer s = isqrt(q_ * q_ * d_);
    Integer lo = q_ > 0 ? s : Integer(-s - 1);
    return floor_div(p_ + lo, r_);
}

Integer QuadraticSurd::ceil() const
{
    if (is_rational())
        return ceil_div(p_, r_);
    return floor() + 1;
}

Integer QuadraticSurd::discriminant() const
{
    if (is_rational())
        throw DomainError("rational has no quadratic discriminant");
    Integer a = r_ * r_, b = -2 * p_ * r_, c = p_ * p_ - q_ * q_ * d_;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    a /= g;
    b /= g;
    c /= g;
    return b * b - 4 * a * c;
}

QuadraticSurd QuadraticSurd::operator-() const
{
    QuadraticSurd s = *this;
    s.p_ = -s.p_;
    s.q_ = -s.q_;
    return s;
}

namespace {

Integer common_field(const QuadraticSurd& a, const QuadraticSurd& b)
{
    if (a.is_rational())
        return b.D();
    if (b.is_rational() || a.D() == b.D())
        return a.D();
    throw FieldMismatch("mixing Q(sqrt(" + a.D().get_str() + ")) and Q(sqrt(" +
                        b.D().get_str() + "))");
}

} // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b)
{
    Integer d = common_field(a, b);
    return QuadraticSurd::from_canonical(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_,
                                         a.r_ * b.r_, d);
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b)
{
    return a + (-b);
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b)
{
    Integer d = common_field(a, b);
    return QuadraticSurd::from_canonical(a.p_ * b.p_ + a.q_ * b.q_ * d,
                                         a.p_ * b.q_ + b.p_ * a.q_, a.r_ * b.r_, d);
}

QuadraticSurd QuadraticSurd::inverse() const
{
    Integer norm = p_ * p_ - q_ * q_ * d_;
    if (norm == 0)
        throw DomainError("division by zero");
    return from_canonical(r_ * p_, -r_ * q_, norm, d_);
}

QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b)
{
    common_field(a, b);
    return a * b.inverse();
}

std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b)
{
    auto as_order = [](int s) {
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    };
    if (a.is_rational() || b.is_rational() || a.D() == b.D())
        return as_order((a - b).sign());
    // a - b = u + v with u in Q(sqrt(Da)) and v = -(qb/rb) sqrt(Db)
    QuadraticSurd u = a - QuadraticSurd(make_rational(b.p(), b.r()));
    int su = u.sign();
    int sv = -sgn(b.q());
    if (su == 0 || su == sv)
        return as_order(sv == 0 ? su : (su == 0 ? sv : su));
    QuadraticSurd v2(make_rational(b.q() * b.q() * b.D(), b.r() * b.r()));
    return as_order((u * u - v2).sign() > 0 ? su : sv);
}

double QuadraticSurd::to_double() const
{
    mpf_class root(d_, 256);
    mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
    mpf_class v(0, 256);
    v = (mpf_class(p_, 256) + mpf_class(q_, 256) * root) / mpf_class(r_, 256);
    return v.get_d();
}

std::string QuadraticSurd::str() const
{
    if (is_rational())
        return to_string(make_rational(p_, r_));
    std::string s = "(" + p_.get_str();
    s += q_ < 0 ? "-" : "+";
    s += Integer(::abs(q_)).get_str() + "*sqrt(" + d_.get_str() + "))/" + r_.get_str();
    return s;
}

std::size_t QuadraticSurd::hash() const
{
    auto limb = [](const Integer& x) -> std::size_t {
        return static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), 0)) * (sgn(x) < 0 ? 31 : 1);
    };
    std::size_t h = limb(p_);
    h = h * 1000003u ^ limb(q_);
    h = h * 1000003u ^ limb(r_);
    h = h * 1000003u ^ limb(d_);
    return h;
}

} // namespace cutseq
