#pragma once

#include <cstddef>
#include <vector>

#include "polynorm/detail/linalg.hpp"

namespace polynorm::detail {

// Extreme rays of the pointed cone {y in Q^dim : a . y <= 0 for all rows a},
// each as a primitive integer vector. The rows must have rank dim.
std::vector<IntegerVector> extreme_rays(const IntegerMatrix& rows,
                                        std::size_t dim);

}  // namespace polynorm::detail
