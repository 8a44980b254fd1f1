#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cutseq {

enum class Side { L, R };
enum class Shade { Light, Dark, None };

struct Letter {
    Side side = Side::L;
    Shade shade = Shade::None;

    bool operator==(const Letter&) const = default;
};

using LetterString = std::vector<Letter>;

// ASCII: light letters are lower case (l, r), dark letters upper case (L, R).
// Unshaded (even) letters are written L, R as well; the reader is told which case it is.
std::string to_ascii(const LetterString& w);
// blackboard bold for light, bold for dark, plain for unshaded
std::string to_unicode(const LetterString& w);

// Accepts ASCII or the Unicode forms above. Whitespace, parentheses and '|' are skipped.
// shaded=false reads L/R (either case) as unshaded letters; shaded=true requires shades.
LetterString parse_letters(std::string_view text, bool shaded);

} // namespace cutseq
