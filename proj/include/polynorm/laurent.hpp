#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polynorm/numeric.hpp"

namespace polynorm {

// Exponent of a Laurent monomial t1^a1 ... tn^an. std::vector's operator<
// gives the lexicographic order used for canonical storage.
using ExponentVector = IntegerVector;

// Sparse multivariate Laurent polynomial with integer coefficients.
//
// Terms are kept in a map keyed by exponent vector, so the representation is
// canonical: no zero coefficients are stored and two polynomials compare
// equal iff their term maps do.
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Integer>;

  explicit LaurentPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  // Drops zero coefficients. Throws DimensionError if an exponent does not
  // have length num_vars.
  LaurentPolynomial(std::size_t num_vars, TermMap terms);

  static LaurentPolynomial constant(std::size_t num_vars, const Integer& c);
  static LaurentPolynomial monomial(ExponentVector exponent,
                                    const Integer& c = 1);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  // Coefficient of t^exponent, zero when absent.
  Integer coefficient(const ExponentVector& exponent) const;

  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial subtract(const LaurentPolynomial& a,
                           const LaurentPolynomial& b);
LaurentPolynomial negate(const LaurentPolynomial& f);
LaurentPolynomial multiply(const LaurentPolynomial& a,
                           const LaurentPolynomial& b);
LaurentPolynomial power(const LaurentPolynomial& f, unsigned long k);

// f(t^-1): every exponent negated.
LaurentPolynomial reflect(const LaurentPolynomial& f);

// Exponent vectors with nonzero coefficient, in lexicographic order.
std::vector<ExponentVector> support(const LaurentPolynomial& f);

// Center c such that alpha -> 2c - alpha permutes supp(f) and maps each
// coefficient to eps times itself for one fixed eps in {+1, -1}. Entries of c
// lie in (1/2)Z. Throws ZeroPolynomialError for f == 0.
std::optional<RationalVector> symmetry_center(const LaurentPolynomial& f);

// Univariate Laurent polynomial, keyed by exponent. May be zero.
class UnivariatePolynomial {
 public:
  using TermMap = std::map<Integer, Integer>;

  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(TermMap terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const UnivariatePolynomial&,
                         const UnivariatePolynomial&) = default;

 private:
  TermMap terms_;
};

UnivariatePolynomial multiply(const UnivariatePolynomial& a,
                              const UnivariatePolynomial& b);

// f(t^phi_1, ..., t^phi_n). phi must be integral and of length num_vars.
UnivariatePolynomial specialize(const LaurentPolynomial& f,
                                const RationalVector& phi);

// Largest minus smallest exponent. Throws ZeroPolynomialError on g == 0.
Integer degree_span(const UnivariatePolynomial& g);

// Default variable names t1, ..., tn.
std::vector<std::string> default_variable_names(std::size_t n);

// Canonical text in the parser's grammar, terms in lexicographic exponent
// order, e.g. "-1 + t1 + t2^-1*t3". Names default to t1..tn.
std::string to_string(const LaurentPolynomial& f,
                      const std::vector<std::string>& names = {});
std::string to_string(const UnivariatePolynomial& g,
                      const std::string& name = "t");

}  // namespace polynorm
