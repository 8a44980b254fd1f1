#pragma once

#include "cutseq/digits.hpp"
#include "cutseq/quadratic_surd.hpp"

namespace cutseq {

struct Step {
    SignedDigit digit;
    QuadraticSurd rest;   // image under the Gauss map; 0 means the expansion ended
};

// Gauss-map steps. Inputs on a branch boundary throw BoundaryError.
Step ocf_step(const QuadraticSurd& x);    // x in (0,1)
Step gcf_step(const QuadraticSurd& y);    // y in I_G = [G-2, G), y != 0
Step ecf_step(const QuadraticSurd& x);    // x in (0,1)
Step eecf_step(const QuadraticSurd& y);   // y in (-1,1), y != 0
Step rcf_step(const QuadraticSurd& x);    // x in (0,1)
Step cf_step(CfKind kind, const QuadraticSurd& x);

// leading digit of x >= 1 for OCF/ECF (rest in [0,1)); RCF gives floor(x)
Step leading_step(CfKind kind, const QuadraticSurd& x);

const QuadraticSurd& golden_ratio();
bool in_gcf_domain(const QuadraticSurd& y);    // G-2 <= y < G
bool in_eecf_domain(const QuadraticSurd& y);   // -1 < y < 1

constexpr std::size_t default_max_depth = 256;

DigitStream cf_expand(const QuadraticSurd& x, CfKind kind, std::size_t max_depth = default_max_depth);
inline DigitStream ocf_expand(const QuadraticSurd& x, std::size_t depth = default_max_depth) { return cf_expand(x, CfKind::OCF, depth); }
inline DigitStream gcf_expand(const QuadraticSurd& x, std::size_t depth = default_max_depth) { return cf_expand(x, CfKind::GCF, depth); }
inline DigitStream ecf_expand(const QuadraticSurd& x, std::size_t depth = default_max_depth) { return cf_expand(x, CfKind::ECF, depth); }
inline DigitStream eecf_expand(const QuadraticSurd& x, std::size_t depth = default_max_depth) { return cf_expand(x, CfKind::EECF, depth); }
inline DigitStream rcf_expand(const QuadraticSurd& x, std::size_t depth = default_max_depth) { return cf_expand(x, CfKind::RCF, depth); }

// Exact value. Periodic streams solve the fixed point of the period matrix and take the
// attracting root. Throws AdmissibilityError for bad digits; truncated streams are rejected.
QuadraticSurd cf_evaluate(const DigitStream& s);

// Value of a purely periodic digit list under the kind's tail semantics (F or H above).
QuadraticSurd periodic_value(CfKind kind, const DigitList& period);

// t_m(x) for |x| > 1 irrational; kind OCF or ECF. t_0 = x and t_{m+1} = 1/(sign(t_m) a - t_m)
// where a is the leading digit of |t_m|.
QuadraticSurd tail(const QuadraticSurd& x, std::size_t m, CfKind kind);

} // namespace cutseq
