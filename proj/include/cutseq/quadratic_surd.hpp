#pragma once

#include "cutseq/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>

namespace cutseq {

// (p + q sqrt(D)) / r. Rationals carry q = 0 and D = 0.
class QuadraticSurd {
public:
    QuadraticSurd() : p_(0), q_(0), r_(1), d_(0) {}
    QuadraticSurd(long v) : p_(v), q_(0), r_(1), d_(0) {}
    QuadraticSurd(const Integer& v) : p_(v), q_(0), r_(1), d_(0) {}
    QuadraticSurd(const Rational& v);

    // sqrt(n) may have a square part; it is pulled out. n < 0 is rejected.
    static QuadraticSurd make(const Integer& p, const Integer& q, const Integer& n,
                              const Integer& r);
    // D must already be square-free (>= 2), or q == 0
    static QuadraticSurd from_canonical(Integer p, Integer q, Integer r, Integer d);
    static QuadraticSurd golden();

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& r() const { return r_; }
    const Integer& D() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    Rational to_rational() const;   // throws DomainError if irrational

    QuadraticSurd conjugate() const;   // throws on rationals
    int sign() const;
    Integer floor() const;
    Integer ceil() const;
    bool is_integer() const { return q_ == 0 && r_ == 1; }

    // discriminant of the minimal polynomial, for irrationals
    Integer discriminant() const;

    QuadraticSurd operator-() const;
    QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }
    QuadraticSurd inverse() const;

    friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
    friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
    friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
    friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b);

    QuadraticSurd& operator+=(const QuadraticSurd& o) { return *this = *this + o; }
    QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this = *this - o; }
    QuadraticSurd& operator*=(const QuadraticSurd& o) { return *this = *this * o; }
    QuadraticSurd& operator/=(const QuadraticSurd& o) { return *this = *this / o; }

    bool operator==(const QuadraticSurd& o) const {
        return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && d_ == o.d_;
    }
    // total order, also across different fields
    friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b);

    double to_double() const;
    std::string str() const;       // "(p+q*sqrt(D))/r" or "p/q"
    std::size_t hash() const;

private:
    void normalize();

    Integer p_, q_, r_, d_;
};

// sign of a + b sqrt(D) with a, b integers
int sign_of(const Integer& a, const Integer& b, const Integer& D);

struct SurdHash {
    std::size_t operator()(const QuadraticSurd& s) const { return s.hash(); }
};

} // namespace cutseq
