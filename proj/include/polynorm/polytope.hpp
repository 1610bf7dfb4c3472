#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "polynorm/numeric.hpp"

namespace polynorm {

// Facet enumeration is exponential in the dimension; the cap keeps runaway
// inputs from hanging. Callers may raise it.
inline constexpr std::size_t kDefaultMaxDim = 8;

// {x : normal . x <= offset} with normal a primitive integer vector.
struct HalfSpace {
  IntegerVector normal;
  Rational offset;

  // Positive rescaling of {x : normal . x <= offset} to canonical form.
  // normal must be nonzero.
  static HalfSpace canonical(const RationalVector& normal,
                             const Rational& offset);

  bool satisfied_by(const RationalVector& x) const;
  bool tight_at(const RationalVector& x) const;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

// Bounded convex polytope in exact rational arithmetic.
//
// The vertex list is minimal and sorted lexicographically. The H-description
// is optional; when present it is irredundant and sorted.
class Polytope {
 public:
  // vertices must already be in convex position (use hull_vertices for
  // arbitrary point sets). They are sorted and deduplicated here.
  Polytope(std::size_t ambient_dim, std::vector<RationalVector> vertices,
           std::optional<std::vector<HalfSpace>> facets = std::nullopt);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<RationalVector>& vertices() const noexcept {
    return vertices_;
  }
  const std::optional<std::vector<HalfSpace>>& facets() const noexcept {
    return facets_;
  }

  // Equality of canonical vertex sets; facets are derived data.
  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t ambient_dim_;
  std::vector<RationalVector> vertices_;
  std::optional<std::vector<HalfSpace>> facets_;
};

// Minimal vertex set of conv(points). A point survives iff it is not a convex
// combination of the remaining ones, decided by an exact LP.
Polytope hull_vertices(const std::vector<RationalVector>& points);
Polytope hull_vertices(const std::vector<IntegerVector>& points);

std::size_t affine_dim(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

// lambda * P; facets are carried along when present. lambda must be > 0.
Polytope dilate(const Polytope& p, const Rational& lambda);

// -P.
Polytope reflect(const Polytope& p);

Rational support_function(const Polytope& p, const RationalVector& phi);
Rational width_function(const Polytope& p, const RationalVector& phi);

// Irredundant H-description of a full-dimensional polytope (double
// description on the homogenized vertex cone).
std::vector<HalfSpace> facets_from_vertices(
    const Polytope& p, std::size_t max_dim = kDefaultMaxDim);

// P* = {phi : phi . x <= 1 for all x in P} with both descriptions. P must be
// full-dimensional with the origin in its interior.
Polytope polar_dual(const Polytope& p, std::size_t max_dim = kDefaultMaxDim);

// Membership test. Uses the H-description when present, otherwise computes
// it (full-dimensional P) or falls back to the exact LP.
bool contains(const Polytope& p, const RationalVector& x);

// Each vertex satisfies every facet and each facet is tight at
// affine_dim(p) affinely independent vertices. Requires facets.
bool descriptions_consistent(const Polytope& p);

nlohmann::json to_json(const HalfSpace& h);
nlohmann::json to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

}  // namespace polynorm
