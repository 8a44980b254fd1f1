#include "cutseq/rational.hpp"

#include "cutseq/errors.hpp"

namespace cutseq {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer ceil_div(const Integer& a, const Integer& b)
{
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer floor_of(const Rational& x)
{
    return floor_div(x.get_num(), x.get_den());
}

bool is_odd(const Integer& x)
{
    return mpz_odd_p(x.get_mpz_t()) != 0;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace cutseq
