#include "polynorm/lattice.hpp"

#include "polynorm/detail/linalg.hpp"
#include "polynorm/error.hpp"

namespace polynorm {
namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + " of length " +
                         std::to_string(got) + ", expected " +
                         std::to_string(want));
  }
}

// Coordinates of d in the echelon basis, or nullopt when d is outside the
// span. Pivot columns are strictly increasing, so a forward sweep is exact.
std::optional<RationalVector> echelon_coordinates(const LatticeReduction& r,
                                                  RationalVector d) {
  RationalVector u(r.essential_dim);
  for (std::size_t i = 0; i < r.essential_dim; ++i) {
    const IntegerVector& row = r.basis[i];
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    u[i] = d[p] / row[p];
    if (u[i] == 0) continue;
    for (std::size_t c = p; c < d.size(); ++c) d[c] -= u[i] * row[c];
  }
  if (!is_zero(d)) return std::nullopt;
  return u;
}

}  // namespace

LatticeReduction reduce(const LaurentPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  LatticeReduction r;
  r.num_vars = f.num_vars();
  r.base = f.terms().begin()->first;
  detail::IntegerMatrix diffs;
  for (const auto& [e, c] : f.terms()) {
    if (e != r.base) diffs.push_back(e - r.base);
  }
  if (!diffs.empty()) r.basis = detail::saturate(diffs, r.num_vars);
  r.essential_dim = r.basis.size();
  return r;
}

IntegerVector exponent_coordinates(const LatticeReduction& r,
                                   const ExponentVector& alpha) {
  require_length(alpha.size(), r.num_vars, "exponent");
  const auto u = echelon_coordinates(r, to_rational(alpha - r.base));
  if (!u) {
    throw DomainError("exponent " + to_string(alpha) +
                      " is outside the affine hull of the support");
  }
  IntegerVector out(u->size());
  for (std::size_t i = 0; i < u->size(); ++i) {
    if (!is_integral((*u)[i])) {
      throw DomainError("exponent " + to_string(alpha) +
                        " is not a lattice point");
    }
    out[i] = (*u)[i].get_num();
  }
  return out;
}

RationalVector point_coordinates(const LatticeReduction& r,
                                 const RationalVector& x) {
  require_length(x.size(), r.num_vars, "point");
  const auto u = echelon_coordinates(r, x - to_rational(r.base));
  if (!u) {
    throw DomainError("point " + to_string(x) +
                      " is outside the affine hull of the support");
  }
  return *u;
}

RationalVector direction_coordinates(const LatticeReduction& r,
                                     const RationalVector& d) {
  require_length(d.size(), r.num_vars, "direction");
  const auto u = echelon_coordinates(r, d);
  if (!u) {
    throw DomainError("direction " + to_string(d) +
                      " is outside the span of the lattice");
  }
  return *u;
}

EssentialFunctional project_functional(const LatticeReduction& r,
                                       const RationalVector& phi) {
  require_length(phi.size(), r.num_vars, "functional");
  EssentialFunctional out(r.essential_dim);
  for (std::size_t i = 0; i < r.essential_dim; ++i) {
    out[i] = dot(phi, r.basis[i]);
  }
  return out;
}

RationalVector lift_functional(const LatticeReduction& r,
                               const EssentialFunctional& essential) {
  require_length(essential.size(), r.essential_dim, "essential functional");
  // phi = sum c_j basis_j with Gram * c = essential.
  const std::size_t m = r.essential_dim;
  detail::RationalMatrix gram(m, RationalVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      gram[i][j] = dot(to_rational(r.basis[i]), r.basis[j]);
    }
  }
  const auto c = detail::solve(gram, essential, m);
  if (!c) throw InternalError("singular Gram matrix of a lattice basis");
  RationalVector phi(r.num_vars);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < r.num_vars; ++k) {
      phi[k] += (*c)[j] * r.basis[j][k];
    }
  }
  return phi;
}

std::vector<IntegerVector> degenerate_directions(const LatticeReduction& r) {
  return detail::integer_kernel(r.basis, r.num_vars);
}

LaurentPolynomial reduced_polynomial(const LatticeReduction& r,
                                     const LaurentPolynomial& f) {
  require_length(f.num_vars(), r.num_vars, "polynomial");
  LaurentPolynomial::TermMap terms;
  for (const auto& [e, c] : f.terms()) {
    terms.emplace(exponent_coordinates(r, e), c);
  }
  return LaurentPolynomial(r.essential_dim, std::move(terms));
}

}  // namespace polynorm
