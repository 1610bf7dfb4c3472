#include "polynorm/detail/double_description.hpp"

#include <bit>
#include <cstdint>
#include <utility>

#include "polynorm/error.hpp"

namespace polynorm::detail {
namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }

  bool contains(const Bitset& sub) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((sub.words_[i] & ~words_[i]) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntegerVector v;
  Bitset zeros;  // processed constraints tight at v
};

Integer idot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void make_primitive(IntegerVector& v) {
  const Integer g = gcd_of(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

}  // namespace

std::vector<IntegerVector> extreme_rays(const IntegerMatrix& rows,
                                        std::size_t dim) {
  const std::size_t n = rows.size();

  // Greedy choice of dim independent rows for the initial simplicial cone.
  std::vector<std::size_t> initial;
  RationalMatrix chosen;
  for (std::size_t i = 0; i < n && initial.size() < dim; ++i) {
    RationalMatrix trial = chosen;
    trial.push_back(to_rational(rows[i]));
    if (rank(trial) == trial.size()) {
      chosen = std::move(trial);
      initial.push_back(i);
    }
  }
  if (initial.size() < dim) {
    throw InternalError("constraint system does not define a pointed cone");
  }

  // Columns of -A0^{-1}: ray j is tight on every initial row but row j.
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector rhs(dim);
    rhs[j] = -1;
    const auto x = solve(chosen, rhs, dim);
    if (!x) throw InternalError("singular initial constraint block");
    Ray ray{primitive_integer_multiple(*x), Bitset(n)};
    for (std::size_t k = 0; k < dim; ++k) {
      if (k != j) ray.zeros.set(initial[k]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(n, false);
  for (std::size_t i : initial) processed[i] = true;

  for (std::size_t i = 0; i < n; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    const IntegerVector& a = rows[i];

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> plus, minus;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = idot(a, rays[r].v);
      if (value[r] > 0) {
        plus.push_back(r);
      } else {
        if (value[r] < 0) {
          minus.push_back(r);
        } else {
          rays[r].zeros.set(i);
        }
        next.push_back(rays[r]);
      }
    }
    if (plus.empty()) {
      rays = std::move(next);
      continue;
    }

    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        const Bitset common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && rays[r].zeros.contains(common)) {
            adjacent = false;
          }
        }
        if (!adjacent) continue;
        Ray ray{IntegerVector(dim), common};
        for (std::size_t k = 0; k < dim; ++k) {
          ray.v[k] = value[p] * rays[q].v[k] - value[q] * rays[p].v[k];
        }
        make_primitive(ray.v);
        ray.zeros.set(i);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntegerVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace polynorm::detail
