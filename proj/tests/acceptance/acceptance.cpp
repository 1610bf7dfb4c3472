// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails or exceeds its time budget.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polynorm/error.hpp"
#include "polynorm/lattice.hpp"
#include "polynorm/norm.hpp"
#include "polynorm/oracle.hpp"
#include "polynorm/polytope.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace polynorm;
using testing::Generator;

// Collects the first few failures of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << failures_ << " failure(s)";
    for (const auto& m : messages_) s << "; " << m;
    return s.str();
  }

 private:
  int failures_ = 0;
  std::vector<std::string> messages_;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

std::string show(const RationalVector& v) { return to_string(v); }

std::vector<RationalVector> sorted(std::vector<RationalVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool centrally_symmetric(const std::vector<RationalVector>& vertices) {
  std::vector<RationalVector> negated;
  for (const auto& v : vertices) negated.push_back(-v);
  return sorted(negated) == sorted(vertices);
}

// Random rational phi with numerators and denominators bounded by 7.
RationalVector random_phi(Generator& gen, std::size_t n) {
  return gen.rational_vector(n, 7, 7);
}

void borromean_golden(Check& c) {
  const auto f = testing::borromean();
  Generator gen(101);
  for (int i = 0; i < 50; ++i) {
    const auto phi = random_phi(gen, 3);
    const Rational expected = abs(phi[0]) + abs(phi[1]) + abs(phi[2]);
    c.expect(norm_def(f, phi) == expected, "norm at " + show(phi));
  }
  const NormBall ball = reduced_ball(f);
  c.expect(ball.reduction.essential_dim == 3, "essential_dim");
  c.expect(ball.inessential_dim == 0, "inessential_dim");
  c.expect(!ball.whole_dual_space() &&
               ball.reduced_ball->vertices() ==
                   sorted({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                           {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}),
           "ball vertices");
}

void great_circle_golden(Check& c) {
  const auto f = testing::great_circle();
  Generator gen(102);
  for (int i = 0; i < 50; ++i) {
    const auto phi = random_phi(gen, 6);
    const Rational s = phi[0] + phi[1] + phi[2] + phi[3] + phi[4] + phi[5];
    const Rational t = -phi[0] - phi[1] - phi[2] + phi[3] + phi[4] + phi[5];
    c.expect(norm_def(f, phi) == 2 * abs(s) + 2 * abs(t), "norm at " + show(phi));
  }
  const NormBall ball = reduced_ball(f);
  c.expect(ball.reduction.essential_dim == 2, "essential_dim");
  c.expect(ball.inessential_dim == 4, "inessential_dim");
  const Rational a(1, 4);
  c.expect(!ball.whole_dual_space() &&
               ball.reduced_ball->vertices() ==
                   sorted({{a, a}, {a, -a}, {-a, a}, {-a, -a}}),
           "ball vertices");
  c.expect(norm_def(f, {1, -1, 0, 0, 0, 0}) == 0, "degenerate direction");
}

void route_equivalence(Check& c) {
  Generator gen(103);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = gen.size(1, 4);
    const auto f = gen.polynomial(n, 12, 5);
    const auto phi = random_phi(gen, n);
    const Rational d = norm_def(f, phi);
    c.expect(norm_geometric(f, phi) == d, "width route at " + show(phi));
    c.expect(oracle::norm_bruteforce_points(f, phi) == d,
             "brute force at " + show(phi));

    const auto psi = gen.integer_vector(n, 7);
    const SpecializedNorm s = norm_specialized(f, psi);
    if (s.indeterminate()) {
      c.expect(specialize(f, psi).is_zero(), "indeterminate without cancellation");
    } else {
      c.expect(Rational(*s.value) == norm_def(f, psi),
               "specialized route: f = " + to_string(f, testing::vars(n)) +
                   ", phi = " + show(psi) + ", f^phi = " +
                   to_string(specialize(f, psi)) + ", span " +
                   to_string(*s.value) + " vs norm " +
                   to_string(norm_def(f, psi)));
    }
  }
}

void decomposition(Check& c) {
  Generator gen(104);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = gen.size(1, 4);
    const auto f = gen.polynomial(n, 8, 4);
    const auto g = gen.polynomial(n, 8, 4);
    const auto k = static_cast<unsigned long>(gen.integer(1, 3));
    const auto phi = random_phi(gen, n);
    const Rational nf = norm_def(f, phi);
    c.expect(norm_def(multiply(f, g), phi) == nf + norm_def(g, phi),
             "product rule at " + show(phi));
    c.expect(norm_def(power(f, k), phi) == Rational(Integer(k)) * nf,
             "power rule at " + show(phi));
    const Factorization fact{{{f, k}, {g, 1}}};
    c.expect(norm_decomposed(fact, phi) == norm_def(fact.product(), phi),
             "decomposed route at " + show(phi));
  }
}

Polytope newton(const LaurentPolynomial& f) { return hull_vertices(support(f)); }

void minkowski(Check& c) {
  Generator gen(105);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen.size(1, 3);
    const auto f = gen.polynomial(n, 8, 4);
    const auto g = gen.polynomial(n, 8, 4);
    const auto k = static_cast<unsigned long>(gen.integer(1, 3));
    c.expect(newton(multiply(f, g)) == minkowski_sum(newton(f), newton(g)),
             "Minkowski sum for instance " + std::to_string(i));
    c.expect(newton(power(f, k)) == dilate(newton(f), Rational(Integer(k))),
             "dilation for instance " + std::to_string(i));
  }
}

void ball_consistency(Check& c) {
  Generator gen(106);
  int done = 0;
  while (done < 100) {
    const std::size_t n = gen.size(2, 4);
    const auto f = gen.nonmonomial(n, 8, 3);
    const std::size_t m = reduce(f).essential_dim;
    if (m < 2 || m > 3) continue;
    ++done;
    const NormBall ball = reduced_ball(f);
    const auto samples = oracle::ball_membership_sweep(f, Rational(1, 8), 2);
    for (const auto& s : samples) {
      c.expect(s.in_ball == s.norm_at_most_one, "sweep disagrees at " + show(s.point));
    }
    const auto& vertices = ball.reduced_ball->vertices();
    for (const auto& v : vertices) {
      c.expect(norm_def(f, lift_functional(ball.reduction, v)) == 1,
               "vertex norm at " + show(v));
    }
    c.expect(centrally_symmetric(vertices), "asymmetric vertex set");
  }
}

// g(t) g(t^-1) t^shift: centrally symmetric about shift.
LaurentPolynomial symmetric_instance(Generator& gen, std::size_t n) {
  const auto g = gen.nonmonomial(n, 5, 3);
  const auto shift = LaurentPolynomial::monomial(gen.exponent(n, 3), 1);
  return multiply(multiply(g, reflect(g)), shift);
}

void symmetric_fast_path(Check& c) {
  Generator gen(107);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen.size(1, 3);
    const auto f = symmetric_instance(gen, n);
    const NormBall fast = symmetric_ball(f);
    const NormBall general = reduced_ball(f);
    c.expect(*fast.reduced_ball == *general.reduced_ball,
             "vertex sets differ for instance " + std::to_string(i));
    c.expect(half_space_presentation_symmetric(f) == *general.reduced_ball->facets(),
             "half-spaces differ for instance " + std::to_string(i));
    for (int j = 0; j < 20; ++j) {
      const auto phi = random_phi(gen, n);
      const Rational d = norm_def(f, phi);
      if (is_zero(project_functional(general.reduction, phi))) {
        c.expect(d == 0, "degenerate phi with nonzero norm");
        continue;
      }
      c.expect(symmetric_facet_formula(f, phi).value == d,
               "facet formula at " + show(phi));
    }
  }
}

void semi_norm(Check& c) {
  Generator gen(108);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = gen.size(1, 4);
    const auto f = gen.polynomial(n, 12, 5);
    const auto phi = random_phi(gen, n);
    const auto psi = random_phi(gen, n);
    const Rational lambda = gen.rational(7, 7);
    const Rational a = norm_def(f, phi);
    c.expect(a >= 0, "negative norm");
    c.expect(norm_def(f, phi + psi) <= a + norm_def(f, psi), "triangle inequality");
    c.expect(norm_def(f, lambda * phi) == abs(lambda) * a, "homogeneity");
  }
}

void non_degeneracy(Check& c) {
  Generator gen(109);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = gen.size(1, 4);
    const auto f = gen.nonmonomial(n, 12, 5);
    const LatticeReduction r = reduce(f);
    RationalVector essential;
    do {
      essential = random_phi(gen, r.essential_dim);
    } while (is_zero(essential));
    c.expect(norm_def(f, lift_functional(r, essential)) > 0,
             "zero norm at essential " + show(essential));

    // A random phi, and a phi made purely of degenerate directions.
    const auto phi = random_phi(gen, n);
    c.expect((norm_def(f, phi) == 0) == is_zero(project_functional(r, phi)),
             "zero set mismatch at " + show(phi));
    RationalVector psi(n);
    for (const auto& d : degenerate_directions(r)) {
      psi = psi + gen.rational(7, 7) * to_rational(d);
    }
    c.expect(is_zero(project_functional(r, psi)), "annihilator projects nonzero");
    c.expect(norm_def(f, psi) == 0, "annihilator with nonzero norm");
  }
}

void segment_products(Check& c) {
  c.expect(factor_ball_vertices(testing::borromean_factors()) ==
               reduced_ball(testing::borromean()).reduced_ball->vertices(),
           "Borromean");
  c.expect(factor_ball_vertices(testing::great_circle_factors()) ==
               reduced_ball(testing::great_circle()).reduced_ball->vertices(),
           "great circle");
  Generator gen(110);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = gen.size(1, 3);
    Factorization fact;
    const auto k = gen.size(1, 4);
    for (std::size_t j = 0; j < k; ++j) {
      fact.factors.push_back({gen.segment_factor(n, 2),
                              static_cast<unsigned long>(gen.integer(1, 2))});
    }
    c.expect(factor_ball_vertices(fact) ==
                 reduced_ball(fact.product()).reduced_ball->vertices(),
             "product " + std::to_string(i));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Borromean rings golden", 1, borromean_golden},
      {2, "great-circle link golden", 1, great_circle_golden},
      {3, "route equivalence", 60, route_equivalence},
      {4, "decomposition", 60, decomposition},
      {5, "Minkowski linearity", 60, minkowski},
      {6, "ball consistency sweep", 120, ball_consistency},
      {7, "symmetric fast path", 120, symmetric_fast_path},
      {8, "semi-norm axioms", 30, semi_norm},
      {9, "non-degeneracy", 30, non_degeneracy},
      {10, "segment-factor ball vertices", 30, segment_products},
  };

  bool all = true;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < cr.limit_seconds;
    const bool pass = check.ok() && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name
              << " (" << seconds << " s, limit " << cr.limit_seconds << " s)";
    if (!check.ok()) std::cout << ": " << check.summary();
    if (!in_time) std::cout << ": over time limit";
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
