#pragma once

#include <cstddef>
#include <vector>

#include "polynorm/laurent.hpp"
#include "polynorm/polytope.hpp"

// Brute-force reference implementations for tests. Nothing in the main code
// path calls into this library, and it shares only the core value types with
// the engine.
namespace polynorm::oracle {

// Literal double loop over ordered support pairs.
Rational norm_bruteforce_points(const LaurentPolynomial& f,
                                const RationalVector& phi);

// Exact decision whether points[candidate] is NOT a convex combination of the
// other points. By Caratheodory it suffices to try every affinely independent
// subset of at most dim+1 other points and solve for barycentric weights.
bool vertex_check_lp(const std::vector<RationalVector>& points,
                     std::size_t candidate);

// Facets of a full-dimensional point set from every hyperplane through dim
// affinely independent points that leaves all points on one side.
std::vector<HalfSpace> facets_bruteforce(
    const std::vector<RationalVector>& points);

struct SweepSample {
  RationalVector point;  // essential coordinates
  bool in_ball = false;  // contains(reduced_ball, point)
  bool norm_at_most_one = false;
};

// Every grid point of [-radius, radius]^m with spacing grid_step, classified
// by the engine's reduced ball and by a brute-force norm evaluation on a
// lifted functional. Requires 1 <= m <= 3.
std::vector<SweepSample> ball_membership_sweep(const LaurentPolynomial& f,
                                               const Rational& grid_step,
                                               const Rational& radius);

}  // namespace polynorm::oracle
