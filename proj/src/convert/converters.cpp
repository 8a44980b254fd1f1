#include "cutseq/converters.hpp"

#include "cutseq/errors.hpp"

#include <map>
#include <unordered_map>

namespace cutseq {

DigitStream canonical_rcf(const DigitStream& rcf)
{
    if (rcf.kind != CfKind::RCF)
        throw DomainError("expected an rcf stream, got " + to_string(rcf.kind));
    if (rcf.truncated)
        throw DomainError("cannot convert a truncated stream");
    DigitStream s = rcf;
    if (!s.leading)
        s.leading = SignedDigit{0, 1};
    validate(s);
    if (s.period.empty() && !s.preperiod.empty() && s.preperiod.back().a == 1) {
        s.preperiod.pop_back();
        if (s.preperiod.empty())
            s.leading->a += 1;
        else
            s.preperiod.back().a += 1;
    }
    normalize_periodic(s);
    return s;
}

namespace {

// Reads the partial quotients n1, n2, ... as one flat sequence with a periodic part.
struct QuotientTape {
    std::vector<Integer> pre, per;

    explicit QuotientTape(const DigitStream& s, bool with_leading)
    {
        if (with_leading)
            pre.push_back(s.leading->a);
        for (const auto& d : s.preperiod)
            pre.push_back(d.a);
        for (const auto& d : s.period)
            per.push_back(d.a);
    }
    bool finite() const { return per.empty(); }
    bool ended(std::size_t i) const { return finite() && i >= pre.size(); }
    bool periodic_part(std::size_t i) const { return !finite() && i >= pre.size(); }
    std::size_t phase(std::size_t i) const { return (i - pre.size()) % per.size(); }
    const Integer& at(std::size_t i) const { return i < pre.size() ? pre[i] : per[phase(i)]; }
};

DigitStream assemble(CfKind kind, int sign, bool has_leading, DigitList out, std::size_t period_start,
                     bool periodic)
{
    DigitStream s;
    s.kind = kind;
    s.sign = sign;
    std::size_t first = 0;
    if (has_leading && !out.empty()) {
        s.leading = out.front();
        first = 1;
    }
    if (periodic) {
        s.preperiod.assign(out.begin() + first, out.begin() + period_start);
        s.period.assign(out.begin() + period_start, out.end());
    } else {
        s.preperiod.assign(out.begin() + first, out.end());
    }
    normalize_periodic(s);
    return s;
}

enum class Pending { None, PlusOne, AfterRewrite };

// odd: OCF rules, otherwise ECF rules
DigitStream singularize(const DigitStream& input, bool odd)
{
    DigitStream rcf = canonical_rcf(input);
    const CfKind kind = odd ? CfKind::OCF : CfKind::ECF;
    const bool has_leading = rcf.leading->a >= 1;
    if (!has_leading && rcf.preperiod.empty() && rcf.period.empty()) {
        DigitStream zero;
        zero.kind = kind;
        return zero;
    }
    QuotientTape tape(rcf, has_leading);

    DigitList out;
    Pending state = Pending::None;
    auto process = [&](const Integer& h) {
        bool keep = odd ? is_odd(h) : is_even(h);
        if (keep) {
            out.push_back({h, 1});
            state = Pending::None;
        } else {
            // h + 1/(m + z) = (h + 1) - (1 - 1/(m + z)); the bracket is resolved on the next read
            out.push_back({h + 1, -1});
            state = Pending::AfterRewrite;
        }
    };

    std::map<std::pair<std::size_t, int>, std::size_t> seen;
    const std::size_t min_out = has_leading ? 1 : 0;
    for (std::size_t i = 0;; ++i) {
        if (tape.ended(i)) {
            if (state == Pending::AfterRewrite) {
                // the bracket is exactly 1
                if (odd)
                    out.push_back({1, 1});
                else
                    return assemble(kind, rcf.sign, has_leading, [&] {
                        DigitList o = out;
                        o.push_back({2, -1});
                        return o;
                    }(), out.size(), true);
            }
            if (!out.empty())
                out.back().eps = 1;   // terminal digit
            return assemble(kind, rcf.sign, has_leading, out, 0, false);
        }
        if (tape.periodic_part(i) && out.size() >= min_out) {
            auto key = std::make_pair(tape.phase(i), static_cast<int>(state));
            auto [it, fresh] = seen.emplace(key, out.size());
            if (!fresh)
                return assemble(kind, rcf.sign, has_leading, out, it->second, true);
        }
        const Integer& q = tape.at(i);
        switch (state) {
        case Pending::None: process(q); break;
        case Pending::PlusOne: process(q + 1); break;
        case Pending::AfterRewrite:
            if (q == 1) {
                state = Pending::PlusOne;
            } else if (odd) {
                out.push_back({1, 1});
                process(q - 1);
            } else {
                for (Integer k = 1; k < q; ++k)
                    out.push_back({2, -1});
                state = Pending::PlusOne;
            }
            break;
        }
    }
}

struct Interval {
    QuadraticSurd lo, hi;
};

// closed cylinder of a digit in the target system
Interval cylinder(CfKind kind, const SignedDigit& d, bool leading)
{
    const QuadraticSurd one(1L);
    QuadraticSurd a(d.a);
    if (leading)
        return d.eps > 0 ? Interval{a, a + one} : Interval{a - one, a};
    switch (kind) {
    case CfKind::OCF:
    case CfKind::ECF:
        return d.eps > 0 ? Interval{(a + one).inverse(), a.inverse()}
                         : Interval{a.inverse(), (a - one).inverse()};
    case CfKind::GCF: {
        const QuadraticSurd& g = golden_ratio();
        Interval pos{(a + g).inverse(), (a + g - QuadraticSurd(2L)).inverse()};
        return d.eps > 0 ? pos : Interval{-pos.hi, -pos.lo};
    }
    case CfKind::EECF: {
        Interval pos{(a + one).inverse(), (a - one).inverse()};
        return d.eps > 0 ? pos : Interval{-pos.hi, -pos.lo};
    }
    default: throw DomainError("no cylinders for " + to_string(kind));
    }
}

// inverse of the digit map: remainder -> next remainder
Matrix2 unshift(CfKind kind, const SignedDigit& d, bool leading)
{
    if (leading)
        return {d.eps, -d.eps * d.a, 0, 1};
    if (is_dual_kind(kind))
        return {-d.a, d.eps, 1, 0};
    return {-d.eps * d.a, d.eps, 1, 0};
}

} // namespace

DigitStream rcf_to_ocf(const DigitStream& rcf) { return singularize(rcf, true); }
DigitStream rcf_to_ecf(const DigitStream& rcf) { return singularize(rcf, false); }

ConversionResult convert_by_refinement(const DigitStream& input, CfKind target)
{
    if (target == CfKind::RCF)
        throw DomainError("refinement target must be ocf, gcf, ecf or eecf");
    DigitStream rcf = canonical_rcf(input);
    ConversionResult res;
    if (rcf.period.empty()) {
        res.stream = cf_expand(cf_evaluate(rcf), target);
        return res;
    }

    const bool dual = is_dual_kind(target);
    const Integer& n1 = rcf.leading->a;
    // current remainder = m(z) for the unread tail z in (0,1)
    Matrix2 m = dual ? Matrix2{rcf.sign, rcf.sign * n1, 0, 1} : Matrix2{1, n1, 0, 1};
    bool leading_phase = !dual && n1 >= 1;
    const bool has_leading = leading_phase;

    QuotientTape tape(rcf, false);
    DigitList out;
    std::size_t pending = 0;
    std::unordered_map<std::string, std::size_t> seen;
    const std::size_t limit = 64 * (tape.pre.size() + tape.per.size()) + 1024;

    if (dual) {
        QuadraticSurd v = cf_evaluate(rcf);
        bool ok = target == CfKind::GCF ? in_gcf_domain(v) : in_eecf_domain(v);
        if (!ok)
            throw DomainError("value " + v.str() + " is outside the " + to_string(target) + " domain");
    }

    for (std::size_t i = 0;; ++i) {
        // emit while the image of (0,1) sits inside one cylinder
        for (;;) {
            bool pole = m.d == 0 || (sgn(m.c) * sgn(m.d) < 0 && ::abs(m.d) <= ::abs(m.c));
            if (pole)
                break;   // -d/c lies in [0,1]
            QuadraticSurd e0 = m.apply_finite(QuadraticSurd(0L)), e1 = m.apply_finite(QuadraticSurd(1L));
            QuadraticSurd lo = std::min(e0, e1), hi = std::max(e0, e1);
            QuadraticSurd mid = (lo + hi) / QuadraticSurd(2L);
            SignedDigit d;
            try {
                if (leading_phase)
                    d = leading_step(target, mid).digit;
                else
                    d = cf_step(target, mid).digit;
            } catch (const Error&) {
                break;
            }
            Interval cyl = cylinder(target, d, leading_phase);
            if (lo < cyl.lo || hi > cyl.hi)
                break;
            out.push_back(d);
            res.max_lookahead = std::max(res.max_lookahead, pending);
            pending = 0;
            m = unshift(target, d, leading_phase) * m;
            leading_phase = false;
        }
        if (tape.periodic_part(i) && !leading_phase) {
            std::string key = std::to_string(tape.phase(i)) + "|" + m.str();
            auto [it, fresh] = seen.emplace(key, out.size());
            if (!fresh) {
                res.stream = assemble(target, dual ? 1 : rcf.sign, has_leading, out, it->second, true);
                res.deep_regrouping = res.max_lookahead > one_group_lookahead;
                return res;
            }
        }
        if (i >= limit) {
            res.stream = assemble(target, dual ? 1 : rcf.sign, has_leading, out, 0, false);
            res.stream.truncated = true;
            res.deep_regrouping = true;
            return res;
        }
        m = m * Matrix2{0, 1, 1, tape.at(i)};
        ++pending;
    }
}

ConversionResult rcf_to_gcf(const DigitStream& rcf)
{
    return convert_by_refinement(rcf, CfKind::GCF);
}

} // namespace cutseq
