#pragma once

#include "cutseq/matrix.hpp"
#include "cutseq/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cutseq {

enum class CfKind { RCF, OCF, GCF, ECF, EECF };

std::string to_string(CfKind k);
CfKind cf_kind_from_string(const std::string& s);   // "ocf", "GCF", ...

// GCF and EECF are "dual" kinds: no leading digit, digit sign is the sign of the value.
inline bool is_dual_kind(CfKind k) { return k == CfKind::GCF || k == CfKind::EECF; }

struct SignedDigit {
    Integer a;
    int eps = 1;

    bool operator==(const SignedDigit& o) const { return a == o.a && eps == o.eps; }
    std::string str() const;   // "(3,-1)"
};

using DigitList = std::vector<SignedDigit>;

// Value semantics.
//   RCF:       sign * (lead + F),  F(d, rest) = 1/(a + F(rest))
//   OCF, ECF:  sign * (a0 + eps0 * F) or sign * F,  F(d, rest) = 1/(a + eps F(rest))
//   GCF, EECF: H(d, rest) = eps / (a + H(rest))
// F and H of the empty list are 0. A finite list ends in a terminal digit whose own
// eps is ignored for RCF/OCF/ECF (there is nothing after it).
struct DigitStream {
    CfKind kind = CfKind::OCF;
    int sign = 1;
    std::optional<SignedDigit> leading;
    DigitList preperiod;
    DigitList period;   // empty: finite stream
    bool truncated = false;

    bool is_finite() const { return period.empty(); }
    // first n digits of preperiod . period^omega (fewer if finite)
    DigitList unrolled(std::size_t n) const;
    // remove leading digit if present, else the first digit
    DigitStream drop_first() const;
    bool operator==(const DigitStream& o) const = default;
    std::string str() const;
};

// throws AdmissibilityError naming the violated rule
void validate(const DigitStream& s);
void validate_digit(CfKind kind, const SignedDigit& d, bool terminal);

// Mobius maps of single digits: the stream value is lead * d1 * d2 * ... applied to the tail
Matrix2 digit_matrix(CfKind kind, const SignedDigit& d);
Matrix2 leading_matrix(CfKind kind, const SignedDigit& d);

// ECF <-> EECF reindexing: <<(b0,e0),(b1,e1),...>>_e = e0 * [[(b0,e1),(b1,e2),...]]_e.
// Also used for GCF -> OCF-shaped lists. Returns (e0, shifted list).
std::pair<int, DigitList> dual_to_forward_signs(const DigitList& dual);
DigitList forward_to_dual_signs(int first_sign, const DigitList& forward);

} // namespace cutseq

namespace cutseq {

// shortest preperiod and primitive period for the same infinite sequence
void normalize_periodic(DigitStream& s);

} // namespace cutseq
