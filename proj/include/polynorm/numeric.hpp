#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polynorm {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Accepts "p" or "p/q" with an optional sign; q must be nonzero.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, e.g. "1,-1/4,0".
RationalVector parse_rational_list(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);
std::string to_string(const RationalVector& v);
std::string to_string(const IntegerVector& v);

RationalVector to_rational(const IntegerVector& v);

bool is_integral(const Rational& value);
bool is_zero(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const IntegerVector& b);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector operator*(const Rational& s, const RationalVector& v);

IntegerVector operator+(const IntegerVector& a, const IntegerVector& b);
IntegerVector operator-(const IntegerVector& a, const IntegerVector& b);

// Non-negative gcd of all entries; 0 for the zero vector.
Integer gcd_of(const IntegerVector& v);

// Least common multiple of the denominators.
Integer common_denominator(const RationalVector& v);

// Positive multiple of v with coprime integer entries. v must be nonzero.
IntegerVector primitive_integer_multiple(const RationalVector& v);

}  // namespace polynorm
