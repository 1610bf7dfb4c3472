#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polynorm/numeric.hpp"

// Exact dense linear algebra over Z and Q used by the lattice and polytope
// code. Matrices are row lists.
namespace polynorm::detail {

using IntegerMatrix = std::vector<IntegerVector>;
using RationalMatrix = std::vector<RationalVector>;

// Row Hermite normal form of the row lattice: zero rows dropped, pivots
// positive and strictly increasing left to right, entries above a pivot
// reduced into [0, pivot).
IntegerMatrix hermite_normal_form(IntegerMatrix rows, std::size_t cols);

// Basis of {x in Z^cols : rows * x = 0}, as row HNF.
IntegerMatrix integer_kernel(const IntegerMatrix& rows, std::size_t cols);

// Basis of span_Q(rows) ∩ Z^cols, as row HNF.
IntegerMatrix saturate(const IntegerMatrix& rows, std::size_t cols);

std::size_t rank(RationalMatrix rows);

// Basis of {x in Q^cols : rows * x = 0}.
RationalMatrix nullspace(RationalMatrix rows, std::size_t cols);

// Some x with a * x = b, or nullopt if the system is inconsistent.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b,
                                    std::size_t cols);

}  // namespace polynorm::detail
