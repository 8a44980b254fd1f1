#pragma once

#include <gmpxx.h>

#include <string>

namespace cutseq {

using Integer = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after canonicalize()
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor_of(const Rational& x);

inline int sgn(const Integer& x) { return ::sgn(x); }
inline int sgn(const Rational& x) { return ::sgn(x); }

bool is_odd(const Integer& x);
inline bool is_even(const Integer& x) { return !is_odd(x); }

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

} // namespace cutseq
