#pragma once

#include <cstddef>
#include <vector>

#include "polynorm/laurent.hpp"

namespace polynorm {

// Essential-variable structure of a polynomial's exponent set.
//
// basis is the row Hermite normal form of the saturated lattice
// span_Q{alpha - base} ∩ Z^n, so every support point has integer coordinates
// and the coordinates of the Newton polytope's affine hull are exactly the
// essential variables.
struct LatticeReduction {
  ExponentVector base;              // lexicographically least support point
  std::vector<IntegerVector> basis;  // essential_dim rows of length num_vars
  std::size_t essential_dim = 0;
  std::size_t num_vars = 0;

  friend bool operator==(const LatticeReduction&,
                         const LatticeReduction&) = default;
};

// Image of a dual vector on the lattice basis: entry i is phi(basis_i).
using EssentialFunctional = RationalVector;

LatticeReduction reduce(const LaurentPolynomial& f);

// Unique integer u with alpha - base = sum u_i basis_i. Throws DomainError
// when alpha - base is not in the lattice.
IntegerVector exponent_coordinates(const LatticeReduction& r,
                                   const ExponentVector& alpha);

// Rational coordinates of a point x of the affine hull base + span(basis).
// Throws DomainError when x lies outside it.
RationalVector point_coordinates(const LatticeReduction& r,
                                 const RationalVector& x);

// Coordinates of a direction (no base offset) in the span of the basis.
RationalVector direction_coordinates(const LatticeReduction& r,
                                     const RationalVector& d);

EssentialFunctional project_functional(const LatticeReduction& r,
                                       const RationalVector& phi);

// The dual vector phi in span(basis) with project_functional(r, phi) ==
// essential. Any other preimage differs by a degenerate direction.
RationalVector lift_functional(const LatticeReduction& r,
                               const EssentialFunctional& essential);

// Integer basis (row HNF) of the annihilator {phi : phi(basis_i) = 0}. Has
// num_vars - essential_dim rows.
std::vector<IntegerVector> degenerate_directions(const LatticeReduction& r);

// f rewritten in the essential variables: each term c t^alpha becomes
// c s^u with u = exponent_coordinates(alpha). Equal to f / t^base after the
// monomial change of variables.
LaurentPolynomial reduced_polynomial(const LatticeReduction& r,
                                     const LaurentPolynomial& f);

}  // namespace polynorm
