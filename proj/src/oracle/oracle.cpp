#include "polynorm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "polynorm/error.hpp"
#include "polynorm/norm.hpp"

namespace polynorm::oracle {
namespace {

using Matrix = std::vector<RationalVector>;

// Gaussian elimination on an augmented system [a | b]. Returns the unique
// solution, or nullopt when the system is inconsistent or underdetermined.
std::optional<RationalVector> unique_solution(Matrix a, RationalVector b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) return std::nullopt;  // free column
    std::swap(a[sel], a[r]);
    std::swap(b[sel], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  RationalVector x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

std::size_t rank_of(Matrix a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t sel = r;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>&
                         visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational pair(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Rational norm_bruteforce_points(const LaurentPolynomial& f,
                                const RationalVector& phi) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (phi.size() != f.num_vars()) throw DimensionError("functional length");
  std::vector<Rational> values;
  for (const auto& [e, c] : f.terms()) {
    Rational v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += phi[i] * e[i];
    values.push_back(v);
  }
  Rational best = 0;
  for (const auto& a : values) {
    for (const auto& b : values) {
      if (a - b > best) best = a - b;
    }
  }
  return best;
}

bool vertex_check_lp(const std::vector<RationalVector>& points,
                     std::size_t candidate) {
  const RationalVector& x = points.at(candidate);
  const std::size_t d = x.size();
  std::vector<RationalVector> others;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != candidate) others.push_back(points[i]);
  }
  bool combination_found = false;
  for (std::size_t k = 1; k <= std::min(d + 1, others.size()) &&
                          !combination_found;
       ++k) {
    for_each_subset(others.size(), k, [&](const std::vector<std::size_t>& idx) {
      // Columns [p_i; 1], right-hand side [x; 1].
      Matrix a(d + 1, RationalVector(k));
      RationalVector b(d + 1);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < k; ++j) a[r][j] = others[idx[j]][r];
        b[r] = x[r];
      }
      for (std::size_t j = 0; j < k; ++j) a[d][j] = 1;
      b[d] = 1;
      const auto lambda = unique_solution(a, b);
      if (lambda && std::all_of(lambda->begin(), lambda->end(),
                                [](const Rational& l) { return l >= 0; })) {
        combination_found = true;
        return false;
      }
      return true;
    });
  }
  return !combination_found;
}

std::vector<HalfSpace> facets_bruteforce(
    const std::vector<RationalVector>& points) {
  if (points.empty()) return {};
  const std::size_t d = points[0].size();
  std::vector<HalfSpace> out;
  for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& idx) {
    // Normal a with a . (p_j - p_0) = 0 for the chosen points.
    Matrix diffs;
    for (std::size_t j = 1; j < idx.size(); ++j) {
      RationalVector v(d);
      for (std::size_t c = 0; c < d; ++c) {
        v[c] = points[idx[j]][c] - points[idx[0]][c];
      }
      diffs.push_back(std::move(v));
    }
    if (rank_of(diffs) + 1 != d) return true;
    // Pin one free coordinate of the one-dimensional kernel to 1.
    for (std::size_t fix = 0; fix < d; ++fix) {
      Matrix a = diffs;
      RationalVector b(diffs.size());
      RationalVector pin(d);
      pin[fix] = 1;
      a.push_back(pin);
      b.push_back(1);
      const auto normal = unique_solution(a, b);
      if (!normal) continue;
      const Rational level = pair(*normal, points[idx[0]]);
      bool any_above = false, any_below = false;
      for (const auto& p : points) {
        const Rational v = pair(*normal, p);
        any_above = any_above || v > level;
        any_below = any_below || v < level;
      }
      if (!any_above) out.push_back(HalfSpace::canonical(*normal, level));
      if (!any_below) out.push_back(HalfSpace::canonical(-*normal, -level));
      break;
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SweepSample> ball_membership_sweep(const LaurentPolynomial& f,
                                               const Rational& grid_step,
                                               const Rational& radius) {
  if (grid_step <= 0 || radius <= 0) {
    throw DomainError("grid step and radius must be positive");
  }
  const NormBall ball = reduced_ball(f);
  const std::size_t m = ball.reduction.essential_dim;
  if (m == 0 || m > 3) {
    throw DomainError("sweep needs 1 <= essential dimension <= 3, got " +
                      std::to_string(m));
  }

  // A preimage of phi~ is phi = phi~^T G^{-1} B with G = B B^T, so
  // phi(alpha) = phi~ . (G^{-1} B alpha).
  const auto& basis = ball.reduction.basis;
  Matrix gram(m, RationalVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      gram[i][j] = pair(to_rational(basis[i]), to_rational(basis[j]));
    }
  }
  std::vector<RationalVector> weights;
  for (const auto& [e, c] : f.terms()) {
    RationalVector be(m);
    for (std::size_t i = 0; i < m; ++i) be[i] = pair(to_rational(basis[i]), to_rational(e));
    const auto w = unique_solution(gram, be);
    if (!w) throw InternalError("singular Gram matrix");
    weights.push_back(*w);
  }

  Rational count_r = 2 * radius / grid_step;
  if (!is_integral(count_r)) {
    throw DomainError("radius must be a multiple of the grid step");
  }
  const unsigned long per_axis = count_r.get_num().get_ui() + 1;
  unsigned long total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= per_axis;

  std::vector<SweepSample> samples;
  samples.reserve(total);
  std::vector<unsigned long> index(m, 0);
  for (unsigned long n = 0; n < total; ++n) {
    unsigned long rest = n;
    RationalVector point(m);
    for (std::size_t i = 0; i < m; ++i) {
      index[i] = rest % per_axis;
      rest /= per_axis;
      point[i] = -radius + grid_step * Rational(Integer(index[i]));
    }
    Rational hi = pair(point, weights[0]);
    Rational lo = hi;
    for (std::size_t k = 1; k < weights.size(); ++k) {
      const Rational v = pair(point, weights[k]);
      if (v > hi) hi = v;
      if (v < lo) lo = v;
    }
    SweepSample s;
    s.in_ball = contains(*ball.reduced_ball, point);
    s.norm_at_most_one = hi - lo <= 1;
    s.point = std::move(point);
    samples.push_back(std::move(s));
  }
  return samples;
}

}  // namespace polynorm::oracle
