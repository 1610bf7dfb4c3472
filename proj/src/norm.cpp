#include "polynorm/norm.hpp"

#include <algorithm>
#include <string>

#include "polynorm/detail/linalg.hpp"
#include "polynorm/error.hpp"

namespace polynorm {
namespace {

void require_usable(const LaurentPolynomial& f, const DualVector& phi) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (phi.size() != f.num_vars()) {
    throw DimensionError("functional of length " + std::to_string(phi.size()) +
                         " for a polynomial in " +
                         std::to_string(f.num_vars()) + " variables");
  }
}

std::vector<RationalVector> essential_support(const LatticeReduction& r,
                                              const LaurentPolynomial& f) {
  std::vector<RationalVector> pts;
  pts.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) {
    pts.push_back(to_rational(exponent_coordinates(r, e)));
  }
  return pts;
}

struct CenteredNewton {
  LatticeReduction reduction;
  Polytope polytope;  // essential coordinates, symmetric about the origin
};

CenteredNewton centered_newton(const LaurentPolynomial& f) {
  const auto center = symmetry_center(f);
  if (!center) {
    throw DomainError("polynomial has no center of symmetry");
  }
  LatticeReduction r = reduce(f);
  const RationalVector shift = point_coordinates(r, *center);
  std::vector<RationalVector> pts = essential_support(r, f);
  for (auto& p : pts) p = p - shift;
  Polytope polytope = hull_vertices(pts);
  return {std::move(r), std::move(polytope)};
}

void cross_validate(const Polytope& ball, std::size_t m) {
  if (!descriptions_consistent(ball)) {
    throw InternalError("norm ball V- and H-descriptions disagree");
  }
  if (affine_dim(ball) != m) {
    throw InternalError("norm ball is not full-dimensional");
  }
  for (const auto& v : ball.vertices()) {
    if (!std::binary_search(ball.vertices().begin(), ball.vertices().end(),
                            -v)) {
      throw InternalError("norm ball is not centrally symmetric");
    }
  }
}

}  // namespace

bool NormBall::contains(const DualVector& phi) const {
  if (whole_dual_space()) {
    if (phi.size() != reduction.num_vars) {
      throw DimensionError("functional length mismatch");
    }
    return true;
  }
  return polynorm::contains(*reduced_ball, project_functional(reduction, phi));
}

LaurentPolynomial Factorization::product() const {
  if (factors.empty()) throw DomainError("empty factorization");
  LaurentPolynomial result =
      LaurentPolynomial::constant(factors.front().polynomial.num_vars(), 1);
  for (const auto& f : factors) {
    result = multiply(result, power(f.polynomial, f.multiplicity));
  }
  return result;
}

Rational norm_def(const LaurentPolynomial& f, const DualVector& phi) {
  require_usable(f, phi);
  auto it = f.terms().begin();
  Rational hi = dot(phi, it->first);
  Rational lo = hi;
  for (++it; it != f.terms().end(); ++it) {
    Rational x = dot(phi, it->first);
    if (x > hi) hi = x;
    if (x < lo) lo = std::move(x);
  }
  return hi - lo;
}

Rational norm_geometric(const LaurentPolynomial& f, const DualVector& phi) {
  require_usable(f, phi);
  return width_function(hull_vertices(support(f)), phi);
}

SpecializedNorm norm_specialized(const LaurentPolynomial& f,
                                 const DualVector& phi) {
  require_usable(f, phi);
  const UnivariatePolynomial g = specialize(f, phi);
  if (g.is_zero()) return {};
  return {degree_span(g)};
}

Rational norm_decomposed(const Factorization& fact, const DualVector& phi) {
  if (fact.factors.empty()) throw DomainError("empty factorization");
  Rational total = 0;
  for (const auto& f : fact.factors) {
    total += Rational(Integer(f.multiplicity)) * norm_def(f.polynomial, phi);
  }
  return total;
}

Rational norm_decomposed(const LaurentPolynomial& target,
                         const Factorization& fact, const DualVector& phi) {
  const LaurentPolynomial product = fact.product();
  if (product.num_vars() != target.num_vars()) {
    throw DimensionError("factorization and target use different variable counts");
  }
  if (product != target) {
    throw DomainError("factorization does not multiply out to the target");
  }
  return norm_decomposed(fact, phi);
}

ActivePair active_pair(const LaurentPolynomial& f, const DualVector& phi) {
  require_usable(f, phi);
  // Terms iterate in lexicographic order; strict comparisons keep the least.
  auto it = f.terms().begin();
  const ExponentVector* alpha = &it->first;
  const ExponentVector* beta = &it->first;
  Rational hi = dot(phi, it->first);
  Rational lo = hi;
  for (++it; it != f.terms().end(); ++it) {
    Rational x = dot(phi, it->first);
    if (x > hi) {
      hi = x;
      alpha = &it->first;
    }
    if (x < lo) {
      lo = std::move(x);
      beta = &it->first;
    }
  }
  return {*alpha, *beta, hi - lo};
}

NormBall reduced_ball(const LaurentPolynomial& f, std::size_t max_dim) {
  if (f.is_zero()) throw ZeroPolynomialError();
  NormBall ball;
  ball.reduction = reduce(f);
  const std::size_t m = ball.reduction.essential_dim;
  ball.inessential_dim = ball.reduction.num_vars - m;
  if (m == 0) return ball;

  // width(N, .) = h(N - N, .), so the ball is the polar of the difference
  // body, which is symmetric with the origin inside.
  const Polytope newton = hull_vertices(essential_support(ball.reduction, f));
  const Polytope difference = minkowski_sum(newton, reflect(newton));
  Polytope polar = polar_dual(difference, max_dim);
  cross_validate(polar, m);
  ball.reduced_ball = std::move(polar);
  return ball;
}

std::vector<RationalVector> factor_ball_vertices(const Factorization& fact) {
  const LaurentPolynomial product = fact.product();
  const LatticeReduction r = reduce(product);
  const std::size_t m = r.essential_dim;
  if (m == 0) throw DomainError("monomial product has no bounded ball");

  // Each segment factor contributes n_i |phi~ . d_i| with d_i its edge in
  // essential coordinates.
  std::vector<RationalVector> forms;
  std::vector<Rational> weights;
  for (const auto& factor : fact.factors) {
    const Polytope seg = hull_vertices(support(factor.polynomial));
    if (seg.vertices().size() != 2) {
      throw DomainError("factor " + to_string(factor.polynomial) +
                        " is not of segment type");
    }
    forms.push_back(direction_coordinates(
        r, seg.vertices()[1] - seg.vertices()[0]));
    weights.emplace_back(Integer(factor.multiplicity));
  }
  if (detail::rank(forms) != m) {
    throw DomainError("factor forms do not span the essential dual space");
  }

  auto norm_of = [&](const RationalVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      s += weights[i] * abs(dot(forms[i], v));
    }
    return s;
  };

  // Enumerate (m-1)-subsets of forms; independent ones cut out a line.
  std::vector<RationalVector> vertices;
  std::vector<std::size_t> pick(m - 1);
  const std::size_t k = forms.size();
  auto visit = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == m - 1) {
      detail::RationalMatrix rows;
      for (std::size_t idx : pick) rows.push_back(forms[idx]);
      const detail::RationalMatrix kernel = detail::nullspace(rows, m);
      if (kernel.size() != 1) return;
      const Rational scale = 1 / norm_of(kernel.front());
      const RationalVector v = scale * kernel.front();
      vertices.push_back(v);
      vertices.push_back(-v);
      return;
    }
    for (std::size_t i = start; i < k; ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  visit(visit, 0, 0);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

NormBall symmetric_ball(const LaurentPolynomial& f, std::size_t max_dim) {
  if (f.is_zero()) throw ZeroPolynomialError();
  CenteredNewton centered = centered_newton(f);
  NormBall ball;
  ball.reduction = std::move(centered.reduction);
  const std::size_t m = ball.reduction.essential_dim;
  ball.inessential_dim = ball.reduction.num_vars - m;
  if (m == 0) return ball;
  ball.reduced_ball =
      dilate(polar_dual(centered.polytope, max_dim), Rational(1, 2));
  return ball;
}

FacetFormulaResult symmetric_facet_formula(const LaurentPolynomial& f,
                                           const DualVector& phi) {
  require_usable(f, phi);
  const CenteredNewton centered = centered_newton(f);
  const EssentialFunctional image =
      project_functional(centered.reduction, phi);
  if (is_zero(image)) {
    throw DomainError("functional vanishes on the essential lattice");
  }
  // The cone over ball facet F_alpha holds exactly the functionals maximized
  // at alpha; vertices are sorted, so the first maximizer is the least.
  const auto& vertices = centered.polytope.vertices();
  std::size_t best = 0;
  Rational best_value = dot(image, vertices[0]);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    Rational x = dot(image, vertices[i]);
    if (x > best_value) {
      best_value = std::move(x);
      best = i;
    }
  }
  return {abs(2 * best_value), vertices[best]};
}

std::vector<HalfSpace> half_space_presentation_symmetric(
    const LaurentPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  const CenteredNewton centered = centered_newton(f);
  std::vector<HalfSpace> out;
  for (const auto& alpha : centered.polytope.vertices()) {
    if (is_zero(alpha)) continue;
    out.push_back(HalfSpace::canonical(alpha, Rational(1, 2)));
    out.push_back(HalfSpace::canonical(-alpha, Rational(1, 2)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json to_json(const NormBall& ball) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& row : ball.reduction.basis) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    basis.push_back(std::move(r));
  }
  nlohmann::json base = nlohmann::json::array();
  for (const auto& x : ball.reduction.base) base.push_back(to_string(x));
  return {{"essential_dim", ball.reduction.essential_dim},
          {"inessential_dim", ball.inessential_dim},
          {"lattice_base", std::move(base)},
          {"lattice_basis", std::move(basis)},
          {"reduced_ball", ball.reduced_ball ? to_json(*ball.reduced_ball)
                                             : nlohmann::json(nullptr)}};
}

}  // namespace polynorm
