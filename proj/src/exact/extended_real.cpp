#include "cutseq/extended_real.hpp"

#include "cutseq/errors.hpp"

namespace cutseq {

const QuadraticSurd& ExtendedReal::value() const
{
    if (!value_)
        throw DomainError("point at infinity has no finite value");
    return *value_;
}

} // namespace cutseq
