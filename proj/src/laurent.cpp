#include "polynorm/laurent.hpp"

#include <sstream>
#include <utility>

#include "polynorm/error.hpp"

namespace polynorm {
namespace {

void require_same_vars(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw DimensionError("polynomials have " + std::to_string(a.num_vars()) +
                         " and " + std::to_string(b.num_vars()) +
                         " variables");
  }
}

void accumulate(LaurentPolynomial::TermMap& terms, const ExponentVector& e,
                const Integer& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t num_vars, TermMap terms)
    : num_vars_(num_vars), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != num_vars_) {
      throw DimensionError("exponent of length " +
                           std::to_string(it->first.size()) + " in a " +
                           std::to_string(num_vars_) + "-variable polynomial");
    }
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t num_vars,
                                              const Integer& c) {
  return LaurentPolynomial(num_vars, {{ExponentVector(num_vars), c}});
}

LaurentPolynomial LaurentPolynomial::monomial(ExponentVector exponent,
                                              const Integer& c) {
  const std::size_t n = exponent.size();
  return LaurentPolynomial(n, {{std::move(exponent), c}});
}

Integer LaurentPolynomial::coefficient(const ExponentVector& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPolynomial add(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_same_vars(a, b);
  LaurentPolynomial::TermMap terms = a.terms();
  for (const auto& [e, c] : b.terms()) accumulate(terms, e, c);
  return LaurentPolynomial(a.num_vars(), std::move(terms));
}

LaurentPolynomial negate(const LaurentPolynomial& f) {
  LaurentPolynomial::TermMap terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_hint(terms.end(), e, -c);
  return LaurentPolynomial(f.num_vars(), std::move(terms));
}

LaurentPolynomial subtract(const LaurentPolynomial& a,
                           const LaurentPolynomial& b) {
  return add(a, negate(b));
}

LaurentPolynomial multiply(const LaurentPolynomial& a,
                           const LaurentPolynomial& b) {
  require_same_vars(a, b);
  LaurentPolynomial::TermMap terms;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      accumulate(terms, ea + eb, ca * cb);
    }
  }
  return LaurentPolynomial(a.num_vars(), std::move(terms));
}

LaurentPolynomial power(const LaurentPolynomial& f, unsigned long k) {
  LaurentPolynomial result = LaurentPolynomial::constant(f.num_vars(), 1);
  LaurentPolynomial base = f;
  while (k > 0) {
    if (k & 1UL) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

LaurentPolynomial reflect(const LaurentPolynomial& f) {
  LaurentPolynomial::TermMap terms;
  for (const auto& [e, c] : f.terms()) {
    ExponentVector neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    terms.emplace(std::move(neg), c);
  }
  return LaurentPolynomial(f.num_vars(), std::move(terms));
}

std::vector<ExponentVector> support(const LaurentPolynomial& f) {
  std::vector<ExponentVector> out;
  out.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) out.push_back(e);
  return out;
}

std::optional<RationalVector> symmetry_center(const LaurentPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  const std::size_t n = f.num_vars();

  // The reflection fixes the barycenter of the support, so it is the only
  // candidate.
  IntegerVector sum(n);
  for (const auto& [e, c] : f.terms()) sum = sum + e;
  RationalVector center(n);
  for (std::size_t i = 0; i < n; ++i) {
    center[i] = Rational(sum[i], Integer(static_cast<unsigned long>(f.term_count())));
    center[i].canonicalize();
  }

  // 2c must be integral for alpha -> 2c - alpha to hit lattice points.
  IntegerVector twice(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational d = 2 * center[i];
    if (!is_integral(d)) return std::nullopt;
    twice[i] = d.get_num();
  }

  std::optional<int> sign;
  for (const auto& [e, c] : f.terms()) {
    const auto it = f.terms().find(twice - e);
    if (it == f.terms().end()) return std::nullopt;
    int s = 0;
    if (it->second == c) {
      s = 1;
    } else if (it->second == -c) {
      s = -1;
    } else {
      return std::nullopt;
    }
    if (!sign) sign = s;
    if (*sign != s) return std::nullopt;
  }
  return center;
}

UnivariatePolynomial::UnivariatePolynomial(TermMap terms)
    : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

UnivariatePolynomial multiply(const UnivariatePolynomial& a,
                              const UnivariatePolynomial& b) {
  UnivariatePolynomial::TermMap terms;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) terms[ea + eb] += ca * cb;
  }
  return UnivariatePolynomial(std::move(terms));
}

UnivariatePolynomial specialize(const LaurentPolynomial& f,
                                const RationalVector& phi) {
  if (phi.size() != f.num_vars()) {
    throw DimensionError("functional of length " + std::to_string(phi.size()) +
                         " for " + std::to_string(f.num_vars()) +
                         " variables");
  }
  IntegerVector weights(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (!is_integral(phi[i])) {
      throw DomainError("specialization needs an integral functional, got " +
                        to_string(phi));
    }
    weights[i] = phi[i].get_num();
  }
  UnivariatePolynomial::TermMap terms;
  for (const auto& [e, c] : f.terms()) {
    Integer degree = 0;
    for (std::size_t i = 0; i < e.size(); ++i) degree += weights[i] * e[i];
    terms[degree] += c;
  }
  return UnivariatePolynomial(std::move(terms));
}

Integer degree_span(const UnivariatePolynomial& g) {
  if (g.is_zero()) throw ZeroPolynomialError();
  return g.terms().rbegin()->first - g.terms().begin()->first;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

namespace {

// Appends " + ", " - " or a leading "-" and returns |c|.
Integer write_sign(std::ostringstream& os, const Integer& c, bool first) {
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  return abs(c);
}

}  // namespace

std::string to_string(const LaurentPolynomial& f,
                      const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  const std::vector<std::string> vars =
      names.empty() ? default_variable_names(f.num_vars()) : names;
  if (vars.size() != f.num_vars()) {
    throw DimensionError("expected " + std::to_string(f.num_vars()) +
                         " variable names, got " + std::to_string(vars.size()));
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const Integer mag = write_sign(os, c, first);
    first = false;
    std::ostringstream mono;
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) mono << '*';
      first_factor = false;
      mono << vars[i];
      if (e[i] != 1) mono << '^' << e[i].get_str();
    }
    if (first_factor) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono.str();
    } else {
      os << mag.get_str() << '*' << mono.str();
    }
  }
  return os.str();
}

std::string to_string(const UnivariatePolynomial& g, const std::string& name) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : g.terms()) {
    const Integer mag = write_sign(os, c, first);
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << name;
    if (e != 1) os << '^' << e.get_str();
  }
  return os.str();
}

}  // namespace polynorm
