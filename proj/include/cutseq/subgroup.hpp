#pragma once

#include "cutseq/matrix.hpp"

#include <string>

namespace cutseq {

enum class SubgroupLabel { FullModular, GammaOdd, Theta, Neither };

std::string to_string(SubgroupLabel label);

struct SubgroupMembership {
    bool full_modular = true;
    bool gamma_odd = false;
    bool theta = false;

    bool contains(SubgroupLabel g) const;
    // most specific single label; GammaOdd wins over Theta when both hold
    SubgroupLabel label() const;
};

SubgroupMembership classify_subgroup(const UnimodularMatrix& m);

enum class CuspClass { OrbitOfInfinity, OrbitOfOne };

std::string to_string(CuspClass c);

struct CuspReport {
    CuspClass cusp_class;
    // g in the group with g(infinity) = x (or g(1) = x for OrbitOfOne, Theta only)
    UnimodularMatrix witness;
};

// x must be rational or infinity
CuspReport cusp_class_gamma(const ExtendedReal& x);
CuspReport cusp_class_theta(const ExtendedReal& x);

} // namespace cutseq
