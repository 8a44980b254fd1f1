#include "cutseq/digits.hpp"

#include "cutseq/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cutseq {

std::string to_string(CfKind k)
{
    switch (k) {
    case CfKind::RCF: return "rcf";
    case CfKind::OCF: return "ocf";
    case CfKind::GCF: return "gcf";
    case CfKind::ECF: return "ecf";
    case CfKind::EECF: return "eecf";
    }
    return "?";
}

CfKind cf_kind_from_string(const std::string& s)
{
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    for (CfKind k : {CfKind::RCF, CfKind::OCF, CfKind::GCF, CfKind::ECF, CfKind::EECF})
        if (to_string(k) == t)
            return k;
    throw DomainError("unknown continued fraction kind '" + s + "'");
}

std::string SignedDigit::str() const
{
    return "(" + a.get_str() + "," + (eps > 0 ? "+1" : "-1") + ")";
}

DigitList DigitStream::unrolled(std::size_t n) const
{
    DigitList out;
    for (std::size_t i = 0; i < preperiod.size() && out.size() < n; ++i)
        out.push_back(preperiod[i]);
    if (period.empty())
        return out;
    for (std::size_t i = 0; out.size() < n; i = (i + 1) % period.size())
        out.push_back(period[i]);
    return out;
}

DigitStream DigitStream::drop_first() const
{
    DigitStream s = *this;
    if (s.leading) {
        s.leading.reset();
        return s;
    }
    if (!s.preperiod.empty()) {
        s.preperiod.erase(s.preperiod.begin());
        return s;
    }
    if (s.period.empty())
        throw DomainError("cannot drop a digit from an empty stream");
    std::rotate(s.period.begin(), s.period.begin() + 1, s.period.end());
    return s;
}

std::string DigitStream::str() const
{
    std::string out = to_string(kind) + (sign < 0 ? " -" : " ");
    if (leading)
        out += leading->str() + ";";
    out += "[";
    for (const auto& d : preperiod)
        out += d.str();
    out += "]";
    if (!period.empty()) {
        out += "(";
        for (const auto& d : period)
            out += d.str();
        out += ")^w";
    }
    if (truncated)
        out += "...";
    return out;
}

void validate_digit(CfKind kind, const SignedDigit& d, bool terminal)
{
    auto fail = [&](const std::string& rule) {
        throw AdmissibilityError(to_string(kind) + " digit " + d.str() + " violates " + rule);
    };
    if (d.eps != 1 && d.eps != -1)
        fail("eps in {+1,-1}");
    switch (kind) {
    case CfKind::RCF:
        if (d.a < 1)
            fail("a >= 1");
        if (d.eps != 1)
            fail("eps = +1");
        break;
    case CfKind::OCF:
    case CfKind::GCF:
        if (d.a < 1 || is_even(d.a))
            fail("a odd positive");
        // the OCF terminal digit's eps is never used
        if (d.a + d.eps < 2 && !(terminal && kind == CfKind::OCF))
            fail("a + eps >= 2");
        break;
    case CfKind::ECF:
    case CfKind::EECF:
        if (d.a < 2 || is_odd(d.a))
            fail("a even positive");
        break;
    }
}

void validate(const DigitStream& s)
{
    if (s.sign != 1 && s.sign != -1)
        throw AdmissibilityError("stream sign must be +1 or -1");
    if (s.leading) {
        if (is_dual_kind(s.kind))
            throw AdmissibilityError(to_string(s.kind) + " streams have no leading digit");
        if (s.kind == CfKind::RCF) {
            if (s.leading->a < 0 || s.leading->eps != 1)
                throw AdmissibilityError("rcf leading digit must be a nonnegative integer part");
        } else {
            bool terminal = s.preperiod.empty() && s.period.empty();
            validate_digit(s.kind, *s.leading, terminal);
        }
    }
    for (std::size_t i = 0; i < s.preperiod.size(); ++i)
        validate_digit(s.kind, s.preperiod[i], s.period.empty() && i + 1 == s.preperiod.size());
    for (const auto& d : s.period)
        validate_digit(s.kind, d, false);
}

Matrix2 digit_matrix(CfKind kind, const SignedDigit& d)
{
    if (is_dual_kind(kind))
        return {0, d.eps, 1, d.a};   // eps / (a + z)
    return {0, 1, d.eps, d.a};       // 1 / (a + eps z)
}

Matrix2 leading_matrix(CfKind kind, const SignedDigit& d)
{
    if (kind == CfKind::RCF)
        return {1, d.a, 0, 1};
    return {d.eps, d.a, 0, 1};       // a + eps z
}

std::pair<int, DigitList> dual_to_forward_signs(const DigitList& dual)
{
    if (dual.empty())
        return {1, {}};
    DigitList out;
    for (std::size_t i = 0; i < dual.size(); ++i)
        out.push_back({dual[i].a, i + 1 < dual.size() ? dual[i + 1].eps : 1});
    return {dual.front().eps, out};
}

DigitList forward_to_dual_signs(int first_sign, const DigitList& forward)
{
    DigitList out;
    int e = first_sign;
    for (const auto& d : forward) {
        out.push_back({d.a, e});
        e = d.eps;
    }
    return out;
}

} // namespace cutseq

namespace cutseq {

void normalize_periodic(DigitStream& s)
{
    if (s.period.empty())
        return;
    const std::size_t n = s.period.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0)
            continue;
        bool repeats = true;
        for (std::size_t i = len; i < n && repeats; ++i)
            repeats = s.period[i] == s.period[i - len];
        if (repeats) {
            s.period.resize(len);
            break;
        }
    }
    while (!s.preperiod.empty() && s.preperiod.back() == s.period.back()) {
        std::rotate(s.period.rbegin(), s.period.rbegin() + 1, s.period.rend());
        s.preperiod.pop_back();
    }
}

} // namespace cutseq
