#pragma once

#include "cutseq/extended_real.hpp"

#include <string>

namespace cutseq {

// Plain integer 2x2 matrix acting by z -> (a z + b)/(c z + d). Determinant is not fixed;
// the CF digit maps have det -1.
struct Matrix2 {
    Integer a = 1, b = 0, c = 0, d = 1;

    static Matrix2 identity() { return {}; }
    Integer det() const { return a * d - b * c; }
    Integer trace() const { return a + d; }

    ExtendedReal apply(const ExtendedReal& z) const;
    QuadraticSurd apply_finite(const QuadraticSurd& z) const;   // throws at the pole

    Matrix2 operator*(const Matrix2& o) const;
    bool operator==(const Matrix2& o) const = default;
    std::string str() const;
};

class UnimodularMatrix {
public:
    UnimodularMatrix() = default;
    // throws DomainError unless ad - bc = 1; sign is canonicalised
    UnimodularMatrix(Integer a, Integer b, Integer c, Integer d);
    explicit UnimodularMatrix(const Matrix2& m);

    static UnimodularMatrix identity() { return {}; }
    // generators
    static UnimodularMatrix S();          // (0,-1;1,1), order three
    static UnimodularMatrix ST_inv();     // (0,1;-1,1), order three
    static UnimodularMatrix T();          // (1,1;0,1)
    static UnimodularMatrix T2();         // (1,2;0,1)
    static UnimodularMatrix theta_S();    // (0,-1;1,0)

    const Integer& a() const { return m_.a; }
    const Integer& b() const { return m_.b; }
    const Integer& c() const { return m_.c; }
    const Integer& d() const { return m_.d; }
    const Matrix2& matrix() const { return m_; }
    Integer trace() const { return m_.trace(); }

    UnimodularMatrix inverse() const;
    UnimodularMatrix operator*(const UnimodularMatrix& o) const;
    bool operator==(const UnimodularMatrix& o) const { return m_ == o.m_; }

    ExtendedReal apply(const ExtendedReal& z) const { return m_.apply(z); }
    std::string str() const { return m_.str(); }

private:
    void canonicalize();
    Matrix2 m_;
};

ExtendedReal mobius_apply(const UnimodularMatrix& m, const ExtendedReal& z);

} // namespace cutseq
