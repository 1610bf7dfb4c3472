#include "polynorm/detail/linalg.hpp"

#include <utility>

namespace polynorm::detail {
namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Column-style unimodular reduction: returns U with rows*U lower echelon and
// the number of nonzero pivot columns. Columns of U beyond that count span
// the integer kernel.
std::pair<IntegerMatrix, std::size_t> column_reduce(IntegerMatrix m,
                                                    std::size_t cols) {
  IntegerMatrix u(cols, IntegerVector(cols));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto combine = [&](std::size_t a, std::size_t b, const Integer& q) {
    // column b -= q * column a
    for (auto& row : m) row[b] -= q * row[a];
    for (auto& row : u) row[b] -= q * row[a];
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < m.size() && pivot < cols; ++r) {
    // Euclid across columns pivot..cols-1 of row r.
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot; c < cols; ++c) {
        if (m[r][c] != 0 && (best == cols || abs(m[r][c]) < abs(m[r][best]))) {
          best = c;
        }
      }
      if (best == cols) break;
      if (best != pivot) swap_cols(pivot, best);
      bool done = true;
      for (std::size_t c = pivot + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][pivot].get_mpz_t());
        combine(pivot, c, q);
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][pivot] != 0) ++pivot;
  }
  return {std::move(u), pivot};
}

}  // namespace

IntegerMatrix hermite_normal_form(IntegerMatrix rows, std::size_t cols) {
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
    // Euclid down the column until a single nonzero entry remains at top.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 &&
            (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(),
                   rows[top][col].get_mpz_t());
        for (std::size_t c = col; c < cols; ++c) {
          rows[r][c] -= q * rows[top][c];
        }
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top == rows.size() || rows[top][col] == 0) continue;
    if (rows[top][col] < 0) {
      for (auto& x : rows[top]) x = -x;
    }
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(),
                 rows[top][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= q * rows[top][c];
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

IntegerMatrix integer_kernel(const IntegerMatrix& rows, std::size_t cols) {
  auto [u, pivots] = column_reduce(rows, cols);
  IntegerMatrix kernel;
  for (std::size_t c = pivots; c < cols; ++c) {
    IntegerVector v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][c];
    kernel.push_back(std::move(v));
  }
  return hermite_normal_form(std::move(kernel), cols);
}

IntegerMatrix saturate(const IntegerMatrix& rows, std::size_t cols) {
  return integer_kernel(integer_kernel(rows, cols), cols);
}

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return rref(rows, cols).size();
}

RationalMatrix nullspace(RationalMatrix rows, std::size_t cols) {
  const std::vector<std::size_t> pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(RationalMatrix a, RationalVector b,
                                    std::size_t cols) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  const std::vector<std::size_t> pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

}  // namespace polynorm::detail
