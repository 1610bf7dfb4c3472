#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polynorm/laurent.hpp"
#include "polynorm/norm.hpp"
#include "polynorm/parser.hpp"

// Shared polynomials and seeded random generators for the test suites.
namespace polynorm::testing {

inline const char* kBorromeanText = "(t1-1)*(t2-1)*(t3-1)";
inline const char* kGreatCircleText =
    "(t1*t2*t3*t4*t5*t6-1)^2*(t1^-1*t2^-1*t3^-1*t4*t5*t6-1)^2";

inline std::vector<std::string> vars(std::size_t n) {
  return default_variable_names(n);
}

inline LaurentPolynomial borromean() { return parse(kBorromeanText, vars(3)); }

inline LaurentPolynomial great_circle() {
  return parse(kGreatCircleText, vars(6));
}

inline Factorization borromean_factors() {
  return {{{parse("t1-1", vars(3)), 1},
           {parse("t2-1", vars(3)), 1},
           {parse("t3-1", vars(3)), 1}}};
}

inline Factorization great_circle_factors() {
  return {{{parse("t1*t2*t3*t4*t5*t6-1", vars(6)), 2},
           {parse("t1^-1*t2^-1*t3^-1*t4*t5*t6-1", vars(6)), 2}}};
}

inline RationalVector q(std::initializer_list<Rational> xs) { return xs; }

// Deterministic instance generator. Every suite seeds its own instance.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  // p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(long max_num = 7, long max_den = 7) {
    Rational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  RationalVector rational_vector(std::size_t n, long max_num = 7,
                                 long max_den = 7) {
    RationalVector v(n);
    for (auto& x : v) x = rational(max_num, max_den);
    return v;
  }

  RationalVector integer_vector(std::size_t n, long bound) {
    RationalVector v(n);
    for (auto& x : v) x = integer(-bound, bound);
    return v;
  }

  ExponentVector exponent(std::size_t n, long bound) {
    ExponentVector e(n);
    for (auto& x : e) x = integer(-bound, bound);
    return e;
  }

  // Nonzero polynomial in n variables with 1..max_terms terms drawn before
  // cancellation, exponents in [-bound, bound], coefficients in [-3,3]\{0}.
  LaurentPolynomial polynomial(std::size_t n, std::size_t max_terms = 12,
                               long bound = 5) {
    while (true) {
      const auto terms = static_cast<std::size_t>(
          integer(1, static_cast<long>(max_terms)));
      LaurentPolynomial::TermMap map;
      for (std::size_t i = 0; i < terms; ++i) {
        long c = 0;
        while (c == 0) c = integer(-3, 3);
        map[exponent(n, bound)] += c;
      }
      LaurentPolynomial f(n, std::move(map));
      if (!f.is_zero()) return f;
    }
  }

  // Polynomial with at least two terms.
  LaurentPolynomial nonmonomial(std::size_t n, std::size_t max_terms = 12,
                                long bound = 5) {
    while (true) {
      LaurentPolynomial f = polynomial(n, max_terms, bound);
      if (f.term_count() >= 2) return f;
    }
  }

  // Binomial or collinear trinomial: a segment-type factor.
  LaurentPolynomial segment_factor(std::size_t n, long bound = 2) {
    ExponentVector d;
    do {
      d = exponent(n, bound);
    } while (std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 0; }));
    const ExponentVector base = exponent(n, bound);
    LaurentPolynomial::TermMap map;
    long c0 = 0, c1 = 0;
    while (c0 == 0) c0 = integer(-2, 2);
    while (c1 == 0) c1 = integer(-2, 2);
    map[base] = c0;
    map[base + d] = c1;
    if (integer(0, 1) == 1) map[base + d + d] = integer(-2, 2);
    return LaurentPolynomial(n, std::move(map));
  }

  std::size_t size(std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(
        integer(static_cast<long>(lo), static_cast<long>(hi)));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace polynorm::testing
