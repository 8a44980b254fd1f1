#pragma once

#include "cutseq/dynamics.hpp"
#include "cutseq/geodesic.hpp"

#include <json.hpp>

namespace cutseq {

using Json = nlohmann::ordered_json;

// Integers as JSON numbers when they fit in 64 bits, else decimal strings.
Json to_json(const Integer& n);
Integer integer_from_json(const Json& j);

// {"a": n, "eps": +-1}
Json to_json(const SignedDigit& d);
// {"a": n, "eps": e} or [n, e]
SignedDigit digit_from_json(const Json& j);
Json to_json(const DigitList& ds);
DigitList digits_from_json(const Json& j);

// {"kind", "sign", "leading", "preperiod", "period", "truncated"}; "sign" and "truncated"
// are optional on input, "kind" may be supplied by the caller instead.
Json to_json(const DigitStream& s);
DigitStream stream_from_json(const Json& j, std::optional<CfKind> kind = std::nullopt);

Json to_json(const QuadraticSurd& s);   // the literal string
Json to_json(const OrientedGeodesic& g);
Json to_json(const UnimodularMatrix& m);   // [[a,b],[c,d]]
Json to_json(const Segment& s);
Json to_json(const SubgroupMembership& m);

// reals as decimal strings with `digits` significant digits
Json real_json(const Real& x, int digits = 30);

} // namespace cutseq
