#include "cutseq/json_io.hpp"

#include "cutseq/errors.hpp"

#include <limits>

namespace cutseq {

Json to_json(const Integer& n)
{
    if (n.fits_slong_p())
        return Json(n.get_si());
    return Json(n.get_str());
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string()) {
        Integer n;
        if (n.set_str(j.get<std::string>(), 10) != 0)
            throw DomainError("not an integer: " + j.get<std::string>());
        return n;
    }
    throw DomainError("expected an integer, got " + j.dump());
}

Json to_json(const SignedDigit& d) { return Json{{"a", to_json(d.a)}, {"eps", d.eps}}; }

SignedDigit digit_from_json(const Json& j)
{
    Json a, e;
    if (j.is_array() && j.size() == 2) {
        a = j[0];
        e = j[1];
    } else if (j.is_object() && j.contains("a") && j.contains("eps")) {
        a = j["a"];
        e = j["eps"];
    } else {
        throw DomainError("a digit is {\"a\": n, \"eps\": +-1} or [n, +-1], got " + j.dump());
    }
    if (!e.is_number_integer() || (e.get<long>() != 1 && e.get<long>() != -1))
        throw DomainError("digit sign must be +1 or -1, got " + e.dump());
    return {integer_from_json(a), int(e.get<long>())};
}

Json to_json(const DigitList& ds)
{
    Json out = Json::array();
    for (const auto& d : ds)
        out.push_back(to_json(d));
    return out;
}

DigitList digits_from_json(const Json& j)
{
    if (!j.is_array())
        throw DomainError("expected a list of digits, got " + j.dump());
    DigitList out;
    for (const auto& d : j)
        out.push_back(digit_from_json(d));
    return out;
}

Json to_json(const DigitStream& s)
{
    Json out;
    out["kind"] = to_string(s.kind);
    out["sign"] = s.sign;
    out["leading"] = s.leading ? to_json(*s.leading) : Json(nullptr);
    out["preperiod"] = to_json(s.preperiod);
    out["period"] = to_json(s.period);
    out["truncated"] = s.truncated;
    return out;
}

DigitStream stream_from_json(const Json& j, std::optional<CfKind> kind)
{
    if (!j.is_object())
        throw DomainError("a digit stream is a JSON object, got " + j.dump());
    DigitStream s;
    if (j.contains("kind"))
        s.kind = cf_kind_from_string(j["kind"].get<std::string>());
    else if (kind)
        s.kind = *kind;
    else
        throw DomainError("digit stream without \"kind\"");
    if (j.contains("sign")) {
        long sg = j["sign"].get<long>();
        if (sg != 1 && sg != -1)
            throw DomainError("stream sign must be +1 or -1");
        s.sign = int(sg);
    }
    if (j.contains("leading") && !j["leading"].is_null())
        s.leading = digit_from_json(j["leading"]);
    if (j.contains("preperiod"))
        s.preperiod = digits_from_json(j["preperiod"]);
    if (j.contains("period"))
        s.period = digits_from_json(j["period"]);
    if (j.contains("truncated"))
        s.truncated = j["truncated"].get<bool>();
    return s;
}

Json to_json(const QuadraticSurd& s) { return s.str(); }

Json to_json(const OrientedGeodesic& g)
{
    return Json{{"forward", to_json(g.forward)}, {"backward", to_json(g.backward)}};
}

Json to_json(const UnimodularMatrix& m)
{
    return Json::array({Json::array({to_json(m.a()), to_json(m.b())}), Json::array({to_json(m.c()), to_json(m.d())})});
}

Json to_json(const Segment& s)
{
    return Json{{"tag", s.tag.str()},
                {"case", std::string(1, to_char(s.tag.letter))},
                {"k", to_json(s.tag.k)},
                {"word", to_ascii(s.word)},
                {"digit", to_json(s.digit)}};
}

Json to_json(const SubgroupMembership& m)
{
    return Json{{"full_modular", m.full_modular},
                {"gamma_odd", m.gamma_odd},
                {"theta", m.theta},
                {"label", to_string(m.label())}};
}

Json real_json(const Real& x, int digits) { return decimal(x, digits); }

} // namespace cutseq
