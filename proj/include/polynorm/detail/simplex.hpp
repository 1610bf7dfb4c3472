#pragma once

#include <vector>

#include "polynorm/numeric.hpp"

namespace polynorm::detail {

// Exact phase-one simplex (Bland's rule): is target a convex combination of
// points? All vectors share one length.
bool in_convex_hull(const std::vector<RationalVector>& points,
                    const RationalVector& target);

}  // namespace polynorm::detail
