#include "polynorm/numeric.hpp"

#include <cctype>
#include <sstream>

#include "polynorm/error.hpp"

namespace polynorm {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("vector lengths differ: " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(s) + "'", 0);
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in '" + std::string(s) + "'",
                     num.size());
  }
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError("malformed rational '" + std::string(trim(item)) + "'",
                       start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

std::string to_string(const IntegerVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

RationalVector to_rational(const IntegerVector& v) {
  return RationalVector(v.begin(), v.end());
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  check_sizes(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const IntegerVector& b) {
  check_sizes(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  check_sizes(a.size(), b.size());
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  check_sizes(a.size(), b.size());
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator-(const RationalVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

IntegerVector operator+(const IntegerVector& a, const IntegerVector& b) {
  check_sizes(a.size(), b.size());
  IntegerVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntegerVector operator-(const IntegerVector& a, const IntegerVector& b) {
  check_sizes(a.size(), b.size());
  IntegerVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Integer gcd_of(const IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) g = gcd(g, x);
  }
  return g;
}

Integer common_denominator(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

IntegerVector primitive_integer_multiple(const RationalVector& v) {
  const Integer den = common_denominator(v);
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (den / v[i].get_den());
  }
  const Integer g = gcd_of(out);
  if (g == 0) throw DomainError("zero vector has no primitive multiple");
  if (g != 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

}  // namespace polynorm
