#pragma once

#include "pomod/poset.hpp"

namespace pomod {

// Hom computations between indicator modules. Each basis homomorphism acts by
// 1 on one connected component and by 0 elsewhere, so a basis is returned as
// the list of those components; the Hom dimension is the list length.

// Hom(k[U], k[D]): one basis element per component of U /\ D.
std::vector<PosetRegion> hom_indicator(const PosetRegion& upset, const PosetRegion& downset);

// Hom(k[U'], k[U]): one basis element per component of U' contained in U.
std::vector<PosetRegion> hom_upset_upset(const PosetRegion& source, const PosetRegion& target);

// Hom(k[D], k[D']): one basis element per component of D' contained in D.
std::vector<PosetRegion> hom_downset_downset(const PosetRegion& source, const PosetRegion& target);

}  // namespace pomod
