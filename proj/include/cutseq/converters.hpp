#pragma once

#include "cutseq/cf_engine.hpp"

namespace cutseq {

// [.., n, 1] -> [.., n+1]; missing integer part becomes 0
DigitStream canonical_rcf(const DigitStream& rcf);

// singularization / insertion rewriting, digit by digit
DigitStream rcf_to_ocf(const DigitStream& rcf);
DigitStream rcf_to_ecf(const DigitStream& rcf);

struct ConversionResult {
    DigitStream stream;
    // most RCF digits that had to be read before one output digit was fixed
    std::size_t max_lookahead = 0;
    // set when some output digit needed more than the current group plus one more
    bool deep_regrouping = false;
};

constexpr std::size_t one_group_lookahead = 3;

// Exact stream transducer: keeps the Mobius map from the unread RCF tail to the current
// remainder and emits a target digit as soon as the image interval fits one cylinder.
ConversionResult convert_by_refinement(const DigitStream& rcf, CfKind target);

// The value must lie in I_G.
ConversionResult rcf_to_gcf(const DigitStream& rcf);

} // namespace cutseq
