#pragma once

#include "cutseq/quadratic_surd.hpp"

#include <optional>
#include <string>

namespace cutseq {

// A point of R u {infinity}. Infinity is its own state, not a sentinel number.
class ExtendedReal {
public:
    ExtendedReal() = default;   // infinity
    ExtendedReal(QuadraticSurd v) : value_(std::move(v)) {}
    ExtendedReal(long v) : value_(QuadraticSurd(v)) {}
    ExtendedReal(const Rational& v) : value_(QuadraticSurd(v)) {}

    static ExtendedReal infinity() { return ExtendedReal(); }

    bool is_infinity() const { return !value_.has_value(); }
    const QuadraticSurd& value() const;   // throws DomainError at infinity

    bool operator==(const ExtendedReal& o) const { return value_ == o.value_; }
    std::string str() const { return value_ ? value_->str() : "inf"; }

private:
    std::optional<QuadraticSurd> value_;
};

} // namespace cutseq
