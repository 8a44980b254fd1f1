#pragma once

#include "cutseq/cf_engine.hpp"
#include "cutseq/letters.hpp"
#include "cutseq/matrix.hpp"
#include "cutseq/natural_extension.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cutseq {

// odd: Gamma and OCF/GCF; even: Theta and ECF/EECF
enum class Parity { Odd, Even };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);
inline CfKind forward_kind(Parity p) { return p == Parity::Odd ? CfKind::OCF : CfKind::ECF; }
inline CfKind backward_kind(Parity p) { return p == Parity::Odd ? CfKind::GCF : CfKind::EECF; }

struct OrientedGeodesic {
    QuadraticSurd forward;    // gamma_infinity
    QuadraticSurd backward;   // gamma_-infinity

    bool operator==(const OrientedGeodesic&) const = default;
    std::string str() const;
};

OrientedGeodesic apply(const UnimodularMatrix& g, const OrientedGeodesic& geo);

enum class CaseLetter { A, B, C, D };
char to_char(CaseLetter c);

struct CaseTag {
    CaseLetter letter = CaseLetter::A;
    Integer k = 1;

    bool operator==(const CaseTag&) const = default;
    std::string str() const;   // "B2"
};

// One return to the section: the word between xi and eta, and the digit it codes.
struct Segment {
    CaseTag tag;
    LetterString word;
    SignedDigit digit;

    bool operator==(const Segment&) const = default;
};

LetterString template_word(Parity p, const CaseTag& t);
SignedDigit template_digit(Parity p, const CaseTag& t);
// inverse of template_digit; sign is the sign of the forward endpoint
CaseTag tag_for_digit(Parity p, int sign, const SignedDigit& d);
// sign of the forward endpoint after a return through this case
int successor_sign(CaseLetter c);
inline int own_sign(CaseLetter c) { return c == CaseLetter::A || c == CaseLetter::B ? 1 : -1; }

bool in_section(const OrientedGeodesic& geo, Parity p);

// The return map matrix z -> 1/(sign(x) a1 - x) for a forward endpoint with |x| > 1.
UnimodularMatrix rho_matrix(const QuadraticSurd& forward, Parity p);

struct StepResult {
    OrientedGeodesic next;
    Segment segment;   // the segment that was traversed
    UnimodularMatrix rho;
};

StepResult rho_step(const OrientedGeodesic& geo, Parity p);
inline StepResult rho_step_odd(const OrientedGeodesic& geo) { return rho_step(geo, Parity::Odd); }
inline StepResult rho_step_even(const OrientedGeodesic& geo) { return rho_step(geo, Parity::Even); }
// previous geodesic; segment is the one ending at xi of geo
StepResult rho_inverse_step(const OrientedGeodesic& geo, Parity p);

struct Lift {
    UnimodularMatrix g;
    OrientedGeodesic geodesic;   // g . geo, in the section
};

constexpr int default_lift_depth = 64;
Lift lift_to_section(const OrientedGeodesic& geo, Parity p, int depth = default_lift_depth);

ExtensionPoint conjugation_J(const OrientedGeodesic& geo, Parity p);
OrientedGeodesic conjugation_J_inv(const ExtensionPoint& e, Parity p);

struct CuttingSequence {
    UnimodularMatrix lift;
    OrientedGeodesic base;          // lifted geodesic; xi sits between backward and forward
    std::vector<Segment> backward;  // nearest to xi first
    std::vector<Segment> forward;
    std::string shade_convention;

    LetterString backward_letters() const;   // left to right, ending at xi
    LetterString forward_letters() const;    // left to right, starting at xi
};

CuttingSequence cutting_sequence(const OrientedGeodesic& geo, std::size_t n_forward, Parity p,
                                 std::size_t n_backward = 0);

enum class Direction { Forward, Backward };

// Forward: templates read left to right from xi; returns the OCF/ECF stream of gamma_infinity.
// Backward: the letters to the left of xi; returns the GCF/EECF stream of -sign(gamma_inf) *
// gamma_-inf. forward_sign is the sign of gamma_infinity; the odd case can read it off the last
// template, the even case needs it. Both results are prefixes (truncated = true).
DigitStream parse_cutting_sequence(const LetterString& word, Direction dir, Parity p,
                                   std::optional<int> forward_sign = std::nullopt);

// gamma_inf = eps [[period^omega]], gamma_-inf = -eps <<reversed period^omega>>.
// Needs sign product (-e1)...(-er) = +1.
OrientedGeodesic closed_geodesic_from_period(const DigitList& period, Parity p, int eps);
// same pair without the sign-product check (then rho^r maps it to minus itself)
OrientedGeodesic periodic_pair(const DigitList& period, Parity p, int eps);
int sign_product(const DigitList& period);

} // namespace cutseq
