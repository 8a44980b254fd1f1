#include "cutseq/errors.hpp"
#include "cutseq/farey.hpp"
#include "cutseq/geodesic.hpp"

namespace cutseq {

namespace {

bool is(const Letter& l, Side s, Shade h) { return l.side == s && l.shade == h; }

void check_shading(const LetterString& w, Parity p)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool shaded = w[i].shade != Shade::None;
        if (shaded != (p == Parity::Odd))
            throw ParseError(p == Parity::Odd ? "odd words need shaded letters" : "even words are unshaded", i);
        if (p == Parity::Odd && i > 0 && w[i].shade == w[i - 1].shade)
            throw ParseError("shades must alternate", i);
    }
}

// one template starting at w[i]; returns the tag and advances i. The even templates
// need the sign of the forward endpoint: "R" alone is A1 and "L" alone is C1.
CaseTag read_template(const LetterString& w, std::size_t& i, Parity p, int sign)
{
    std::size_t start = i;
    auto at = [&](std::size_t j) -> const Letter& {
        if (j >= w.size())
            throw ParseError("incomplete segment", start);
        return w[j];
    };
    CaseTag t;
    if (p == Parity::Odd) {
        const Letter& first = at(i);
        if (first.shade == Shade::Light) {
            // (lL)^(k-1) then lR or r
            long k = 1;
            while (is(at(i), Side::L, Shade::Light) && i + 1 < w.size() && is(at(i + 1), Side::L, Shade::Dark)) {
                i += 2;
                ++k;
            }
            if (is(at(i), Side::R, Shade::Light)) {
                ++i;
                return {CaseLetter::B, k};
            }
            if (is(at(i), Side::L, Shade::Light) && is(at(i + 1), Side::R, Shade::Dark)) {
                i += 2;
                return {CaseLetter::A, k};
            }
        } else {
            long k = 1;
            while (is(at(i), Side::R, Shade::Dark) && i + 1 < w.size() && is(at(i + 1), Side::R, Shade::Light)) {
                i += 2;
                ++k;
            }
            if (is(at(i), Side::L, Shade::Dark)) {
                ++i;
                return {CaseLetter::D, k};
            }
            if (is(at(i), Side::R, Shade::Dark) && is(at(i + 1), Side::L, Shade::Light)) {
                i += 2;
                return {CaseLetter::C, k};
            }
        }
        throw ParseError("not a segment template", start);
    }
    Side s = sign > 0 ? Side::L : Side::R;
    long run = 0;
    while (at(i).side == s) {
        ++run;
        ++i;
    }
    ++i;   // closing letter
    bool left = s == Side::L;
    if (run % 2 == 0)
        return {left ? CaseLetter::A : CaseLetter::C, (run + 2) / 2};
    return {left ? CaseLetter::B : CaseLetter::D, (run + 1) / 2};
}

// digits shared by every point of the open interval (lo, hi) under the dual map
DigitList common_dual_digits(Rational lo, Rational hi, CfKind kind)
{
    DigitList out;
    const QuadraticSurd& g = golden_ratio();
    QuadraticSurd dom_lo = kind == CfKind::GCF ? g - QuadraticSurd(2L) : QuadraticSurd(-1L);
    QuadraticSurd dom_hi = kind == CfKind::GCF ? g : QuadraticSurd(1L);
    for (;;) {
        if (lo < 0 && hi > 0)
            return out;
        if (QuadraticSurd(lo) < dom_lo || QuadraticSurd(hi) > dom_hi)
            return out;
        if (lo == 0 || hi == 0)
            return out;
        std::optional<SignedDigit> d;
        for (int den : {2, 3, 5, 7}) {
            Rational m = (lo * (den - 1) + hi) / den;
            try {
                d = cf_step(kind, QuadraticSurd(m)).digit;
                break;
            } catch (const BoundaryError&) {
            }
        }
        if (!d)
            return out;
        auto image = [&](const Rational& y) -> Rational { return Rational(1 / abs(y)) - Rational(d->a); };
        Rational a = image(lo), b = image(hi);
        if (b < a)
            std::swap(a, b);
        if (QuadraticSurd(a) < dom_lo || QuadraticSurd(b) > dom_hi)
            return out;
        out.push_back(*d);
        lo = a;
        hi = b;
    }
}

} // namespace

DigitStream parse_cutting_sequence(const LetterString& word, Direction dir, Parity p, std::optional<int> forward_sign)
{
    check_shading(word, p);
    DigitStream s;
    s.truncated = true;
    if (dir == Direction::Forward) {
        s.kind = forward_kind(p);
        if (p == Parity::Even && !forward_sign)
            throw DomainError("parsing an even word needs the sign of the forward endpoint");
        std::size_t i = 0;
        std::optional<CaseLetter> prev;
        while (i < word.size()) {
            std::size_t at = i;
            int expect = prev ? successor_sign(*prev) : forward_sign.value_or(0);
            CaseTag t = read_template(word, i, p, expect);
            int sign = own_sign(t.letter);
            if (prev && successor_sign(*prev) != sign)
                throw ParseError(std::string("case ") + to_char(t.letter) + " cannot follow case " + to_char(*prev), at);
            if (!prev && forward_sign && *forward_sign != sign)
                throw ParseError("first segment disagrees with the forward sign", at);
            SignedDigit d = template_digit(p, t);
            if (!prev) {
                s.sign = sign;
                s.leading = d;
            } else {
                s.preperiod.push_back(d);
            }
            prev = t.letter;
        }
        return s;
    }

    s.kind = backward_kind(p);
    if (word.empty())
        return s;
    int eps;
    if (forward_sign) {
        eps = *forward_sign;
    } else if (p == Parity::Odd) {
        // the last letter names the last template: A ends R, B r, C l, D L; A and D
        // are followed by gamma_inf > 1
        eps = word.back().shade == Shade::Dark ? 1 : -1;
    } else {
        throw DomainError("backward parsing of an even word needs the sign of the forward endpoint");
    }
    if (eps != 1 && eps != -1)
        throw DomainError("forward sign must be +1 or -1");

    // the letters pin the backward endpoint to a Farey interval; read the dual digits off it
    ArcInterval arc = backward_endpoint_interval(word, eps);
    DigitList digits;
    if (arc.lo && arc.hi && !arc.wraps) {
        Rational lo = -eps * *arc.lo, hi = -eps * *arc.hi;
        if (hi < lo)
            std::swap(lo, hi);
        digits = common_dual_digits(lo, hi, s.kind);
    }

    // the digits must regenerate the word from the right
    std::size_t end = word.size();
    int cur = eps;
    for (const SignedDigit& d : digits) {
        int prev_sign = -d.eps * cur;
        LetterString w = template_word(p, tag_for_digit(p, prev_sign, d));
        if (w.size() > end)
            break;
        std::size_t at = end - w.size();
        if (!std::equal(w.begin(), w.end(), word.begin() + long(at)))
            throw ParseError("letters do not form the templates of their own endpoint", at);
        s.preperiod.push_back(d);
        end = at;
        cur = prev_sign;
    }
    return s;
}

} // namespace cutseq
