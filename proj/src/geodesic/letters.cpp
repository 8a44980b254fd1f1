#include "cutseq/letters.hpp"

#include "cutseq/errors.hpp"

namespace cutseq {

namespace {

// UTF-8 of U+1D543, U+211D, U+1D40B, U+1D411
constexpr std::string_view light_l = "\xF0\x9D\x95\x83";
constexpr std::string_view light_r = "\xE2\x84\x9D";
constexpr std::string_view dark_l = "\xF0\x9D\x90\x8B";
constexpr std::string_view dark_r = "\xF0\x9D\x90\x91";

} // namespace

std::string to_ascii(const LetterString& w)
{
    std::string out;
    for (const Letter& l : w) {
        char c = l.side == Side::L ? 'L' : 'R';
        if (l.shade == Shade::Light)
            c = char(c - 'A' + 'a');
        out.push_back(c);
    }
    return out;
}

std::string to_unicode(const LetterString& w)
{
    std::string out;
    for (const Letter& l : w) {
        bool left = l.side == Side::L;
        switch (l.shade) {
        case Shade::Light: out += left ? light_l : light_r; break;
        case Shade::Dark: out += left ? dark_l : dark_r; break;
        case Shade::None: out += left ? 'L' : 'R'; break;
        }
    }
    return out;
}

LetterString parse_letters(std::string_view text, bool shaded)
{
    LetterString out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::string_view rest = text.substr(i);
        auto take = [&](std::string_view tok, Side side, Shade shade) {
            if (rest.substr(0, tok.size()) != tok)
                return false;
            if (!shaded && shade != Shade::None)
                shade = Shade::None;
            out.push_back({side, shade});
            i += tok.size();
            return true;
        };
        if (take(light_l, Side::L, Shade::Light) || take(light_r, Side::R, Shade::Light) ||
            take(dark_l, Side::L, Shade::Dark) || take(dark_r, Side::R, Shade::Dark))
            continue;
        char c = text[i];
        if (c == ' ' || c == '(' || c == ')' || c == '|' || c == '\t' || c == ',') {
            ++i;
            continue;
        }
        if (c == 'L' || c == 'R' || c == 'l' || c == 'r') {
            Side side = (c == 'L' || c == 'l') ? Side::L : Side::R;
            Shade shade = Shade::None;
            if (shaded)
                shade = (c == 'l' || c == 'r') ? Shade::Light : Shade::Dark;
            out.push_back({side, shade});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in letter string", i);
    }
    return out;
}

} // namespace cutseq
