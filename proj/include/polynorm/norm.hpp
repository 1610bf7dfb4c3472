#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polynorm/lattice.hpp"
#include "polynorm/laurent.hpp"
#include "polynorm/polytope.hpp"

namespace polynorm {

// Element of (R^n)*, paired with exponents by the dot product.
using DualVector = RationalVector;

// Unit ball of the Laurent norm. The full ball is reduced_ball x (R^{n-m})*;
// when f is a monomial the norm vanishes identically and reduced_ball is
// empty (the ball is the whole dual space).
struct NormBall {
  LatticeReduction reduction;
  std::optional<Polytope> reduced_ball;
  std::size_t inessential_dim = 0;

  bool whole_dual_space() const noexcept { return !reduced_ball.has_value(); }

  // phi in B_f, decided on its essential image.
  bool contains(const DualVector& phi) const;
};

struct Factor {
  LaurentPolynomial polynomial;
  unsigned long multiplicity = 1;
};

// f = prod f_i^{n_i}. Factors are supplied by the caller; nothing here
// factors polynomials.
struct Factorization {
  std::vector<Factor> factors;

  // Throws DimensionError on mixed variable counts, DomainError when empty.
  LaurentPolynomial product() const;
};

// Indeterminate when the specialization cancels to zero.
struct SpecializedNorm {
  std::optional<Integer> value;

  bool indeterminate() const noexcept { return !value.has_value(); }
};

struct ActivePair {
  ExponentVector alpha;  // maximizer of phi over supp(f)
  ExponentVector beta;   // minimizer
  Rational value;
};

struct FacetFormulaResult {
  Rational value;
  RationalVector vertex;  // centered Newton vertex, essential coordinates
};

// sup over support pairs of phi(alpha - beta).
Rational norm_def(const LaurentPolynomial& f, const DualVector& phi);

// Width of the Newton polytope in direction phi.
Rational norm_geometric(const LaurentPolynomial& f, const DualVector& phi);

// Degree span of f(t^phi_1, ..., t^phi_n); phi must be integral.
SpecializedNorm norm_specialized(const LaurentPolynomial& f,
                                 const DualVector& phi);

// sum n_i ||phi||_{f_i}.
Rational norm_decomposed(const Factorization& fact, const DualVector& phi);

// Same, after checking that fact multiplies out to target (DomainError
// otherwise).
Rational norm_decomposed(const LaurentPolynomial& target,
                         const Factorization& fact, const DualVector& phi);

// Lexicographically least maximizing pair.
ActivePair active_pair(const LaurentPolynomial& f, const DualVector& phi);

// B~_f as the polar of the difference body Ne(f) - Ne(f) in essential
// coordinates. Both descriptions are cross-checked before returning.
NormBall reduced_ball(const LaurentPolynomial& f,
                      std::size_t max_dim = kDefaultMaxDim);

// Ball vertices from a product of segment-type factors: each ||phi||_{f_i}
// is |l_i(phi~)|, and vertices sit on the lines cut out by m-1 independent
// forms. Throws DomainError for a non-segment factor.
std::vector<RationalVector> factor_ball_vertices(const Factorization& fact);

// Symmetric fast path: half the polar of the centered Newton polytope.
// Throws DomainError when f has no symmetry center.
NormBall symmetric_ball(const LaurentPolynomial& f,
                        std::size_t max_dim = kDefaultMaxDim);

// ||phi||_f = |2 phi~(alpha)| for the centered vertex alpha whose ball facet
// cone contains phi~.
FacetFormulaResult symmetric_facet_formula(const LaurentPolynomial& f,
                                           const DualVector& phi);

// {+-phi~(alpha) <= 1/2} over the centered Newton vertices, canonical and
// deduplicated.
std::vector<HalfSpace> half_space_presentation_symmetric(
    const LaurentPolynomial& f);

nlohmann::json to_json(const NormBall& ball);

}  // namespace polynorm
