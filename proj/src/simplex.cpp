#include "polynorm/detail/simplex.hpp"

#include <cstddef>

#include "polynorm/detail/linalg.hpp"

namespace polynorm::detail {

bool in_convex_hull(const std::vector<RationalVector>& points,
                    const RationalVector& target) {
  if (points.empty()) return false;
  const std::size_t k = points.size();
  const std::size_t d = target.size();
  const std::size_t rows = d + 1;
  const std::size_t rhs = k + rows;

  // [A | I | b] with A = (points as columns; a row of ones), b >= 0, and the
  // identity block holding the artificial basis.
  RationalMatrix t(rows, RationalVector(rhs + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) t[r][j] = r < d ? points[j][r] : 1;
    t[r][rhs] = r < d ? target[r] : 1;
    if (t[r][rhs] < 0) {
      for (std::size_t j = 0; j < k; ++j) t[r][j] = -t[r][j];
      t[r][rhs] = -t[r][rhs];
    }
    t[r][k + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = k + r;

  // Sum of artificials w = -obj[rhs] + sum_j obj[j] x_j over nonbasic x_j.
  RationalVector obj(rhs + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) obj[j] -= t[r][j];
    obj[rhs] -= t[r][rhs];
  }

  while (obj[rhs] != 0) {
    std::size_t enter = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == k) return false;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rational ratio = t[r][rhs] / t[r][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    // w is bounded below by zero, so some row always qualifies.

    const Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) {
      if (x != 0) x *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j <= rhs; ++j) {
        if (t[leave][j] != 0) t[r][j] -= f * t[leave][j];
      }
    }
    const Rational f = obj[enter];
    for (std::size_t j = 0; j <= rhs; ++j) {
      if (t[leave][j] != 0) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return true;
}

}  // namespace polynorm::detail
