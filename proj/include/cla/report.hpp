#pragma once

#include "cla/specfile.hpp"

namespace cla {

/// Full plain-text analysis of one algebra: factor laws, bracket laws,
/// membership in the defining form (when present), commutants, bilinear
/// forms with their laws and inverses, Casimir elements with both
/// centrality oracles, roots, and the loop-extension Jacobi check over
/// the mode window [lo, hi]. Output is deterministic and byte-stable.
std::string make_report(const AlgebraBundle& b, long lo = -2, long hi = 2);

} // namespace cla
