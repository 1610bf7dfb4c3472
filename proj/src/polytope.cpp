#include "polynorm/polytope.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "polynorm/detail/double_description.hpp"
#include "polynorm/detail/linalg.hpp"
#include "polynorm/detail/simplex.hpp"
#include "polynorm/error.hpp"

namespace polynorm {
namespace {

void require_dim(std::size_t got, std::size_t want) {
  if (got != want) {
    throw DimensionError("vector of length " + std::to_string(got) +
                         " in ambient dimension " + std::to_string(want));
  }
}

std::size_t rank_of_differences(const std::vector<RationalVector>& pts) {
  if (pts.size() < 2) return 0;
  detail::RationalMatrix diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return detail::rank(std::move(diffs));
}

}  // namespace

HalfSpace HalfSpace::canonical(const RationalVector& normal,
                               const Rational& offset) {
  if (is_zero(normal)) throw DomainError("half-space with zero normal");
  HalfSpace h;
  h.normal = primitive_integer_multiple(normal);
  // The scale factor is the ratio of any nonzero entry pair.
  std::size_t i = 0;
  while (normal[i] == 0) ++i;
  const Rational scale = Rational(h.normal[i]) / normal[i];
  h.offset = offset * scale;
  return h;
}

bool HalfSpace::satisfied_by(const RationalVector& x) const {
  return dot(x, normal) <= offset;
}

bool HalfSpace::tight_at(const RationalVector& x) const {
  return dot(x, normal) == offset;
}

Polytope::Polytope(std::size_t ambient_dim,
                   std::vector<RationalVector> vertices,
                   std::optional<std::vector<HalfSpace>> facets)
    : ambient_dim_(ambient_dim),
      vertices_(std::move(vertices)),
      facets_(std::move(facets)) {
  if (vertices_.empty()) throw DomainError("polytope without vertices");
  for (const auto& v : vertices_) require_dim(v.size(), ambient_dim_);
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  if (facets_) {
    for (const auto& h : *facets_) require_dim(h.normal.size(), ambient_dim_);
    std::sort(facets_->begin(), facets_->end());
    facets_->erase(std::unique(facets_->begin(), facets_->end()),
                   facets_->end());
  }
}

Polytope hull_vertices(const std::vector<RationalVector>& points) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  const std::size_t dim = points.front().size();
  for (const auto& p : points) require_dim(p.size(), dim);

  std::vector<RationalVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Dropping a non-vertex leaves the hull unchanged, so each test only needs
  // the survivors so far. The lexicographic extremes are always vertices.
  std::vector<bool> alive(pts.size(), true);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    std::vector<RationalVector> others;
    others.reserve(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i && alive[j]) others.push_back(pts[j]);
    }
    if (detail::in_convex_hull(others, pts[i])) alive[i] = false;
  }
  std::vector<RationalVector> vertices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (alive[i]) vertices.push_back(std::move(pts[i]));
  }
  return Polytope(dim, std::move(vertices));
}

Polytope hull_vertices(const std::vector<IntegerVector>& points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rational(p));
  return hull_vertices(pts);
}

std::size_t affine_dim(const Polytope& p) {
  return rank_of_differences(p.vertices());
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DimensionError("Minkowski sum of polytopes in dimensions " +
                         std::to_string(p.ambient_dim()) + " and " +
                         std::to_string(q.ambient_dim()));
  }
  std::vector<RationalVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return hull_vertices(sums);
}

Polytope dilate(const Polytope& p, const Rational& lambda) {
  if (lambda <= 0) {
    throw DomainError("dilation factor must be positive, got " +
                      to_string(lambda));
  }
  std::vector<RationalVector> vertices;
  vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vertices.push_back(lambda * v);
  std::optional<std::vector<HalfSpace>> facets;
  if (p.facets()) {
    facets.emplace();
    for (const auto& h : *p.facets()) {
      facets->push_back({h.normal, h.offset * lambda});
    }
  }
  return Polytope(p.ambient_dim(), std::move(vertices), std::move(facets));
}

Polytope reflect(const Polytope& p) {
  std::vector<RationalVector> vertices;
  vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vertices.push_back(-v);
  std::optional<std::vector<HalfSpace>> facets;
  if (p.facets()) {
    facets.emplace();
    for (const auto& h : *p.facets()) {
      IntegerVector normal(h.normal.size());
      for (std::size_t i = 0; i < normal.size(); ++i) normal[i] = -h.normal[i];
      facets->push_back({std::move(normal), h.offset});
    }
  }
  return Polytope(p.ambient_dim(), std::move(vertices), std::move(facets));
}

Rational support_function(const Polytope& p, const RationalVector& phi) {
  require_dim(phi.size(), p.ambient_dim());
  Rational best = dot(p.vertices().front(), phi);
  for (const auto& v : p.vertices()) {
    Rational x = dot(v, phi);
    if (x > best) best = std::move(x);
  }
  return best;
}

Rational width_function(const Polytope& p, const RationalVector& phi) {
  return support_function(p, phi) + support_function(p, -phi);
}

std::vector<HalfSpace> facets_from_vertices(const Polytope& p,
                                            std::size_t max_dim) {
  const std::size_t d = p.ambient_dim();
  if (d > max_dim) {
    throw DomainError("ambient dimension " + std::to_string(d) +
                      " exceeds the cap of " + std::to_string(max_dim));
  }
  if (affine_dim(p) != d) {
    throw DomainError("facet enumeration needs a full-dimensional polytope");
  }
  if (d == 0) return {};

  // Facets a.x <= b are the extreme rays (a, -b) of the cone
  // {(a, c) : a.v + c <= 0 for every vertex v}.
  detail::IntegerMatrix rows;
  rows.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    RationalVector h = v;
    h.push_back(1);
    rows.push_back(primitive_integer_multiple(h));
  }
  std::vector<HalfSpace> facets;
  for (const auto& ray : detail::extreme_rays(rows, d + 1)) {
    RationalVector normal(ray.begin(), ray.begin() + static_cast<long>(d));
    facets.push_back(HalfSpace::canonical(normal, Rational(-ray[d])));
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

Polytope polar_dual(const Polytope& p, std::size_t max_dim) {
  const std::size_t d = p.ambient_dim();
  if (d == 0) throw DomainError("polar dual in dimension zero");
  const std::vector<HalfSpace> facets = facets_from_vertices(p, max_dim);
  std::vector<RationalVector> vertices;
  vertices.reserve(facets.size());
  for (const auto& h : facets) {
    if (h.offset <= 0) {
      throw DomainError("polar dual needs the origin in the interior");
    }
    RationalVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = h.normal[i] / h.offset;
    vertices.push_back(std::move(v));
  }
  std::vector<HalfSpace> dual_facets;
  dual_facets.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    dual_facets.push_back(HalfSpace::canonical(v, 1));
  }
  return Polytope(d, std::move(vertices), std::move(dual_facets));
}

bool contains(const Polytope& p, const RationalVector& x) {
  require_dim(x.size(), p.ambient_dim());
  auto all_satisfied = [&](const std::vector<HalfSpace>& hs) {
    return std::all_of(hs.begin(), hs.end(),
                       [&](const HalfSpace& h) { return h.satisfied_by(x); });
  };
  if (p.facets()) return all_satisfied(*p.facets());
  if (affine_dim(p) == p.ambient_dim() && p.ambient_dim() <= kDefaultMaxDim) {
    return all_satisfied(facets_from_vertices(p));
  }
  return detail::in_convex_hull(p.vertices(), x);
}

bool descriptions_consistent(const Polytope& p) {
  if (!p.facets()) throw DomainError("polytope has no H-description");
  const std::size_t dim = affine_dim(p);
  for (const auto& h : *p.facets()) {
    std::vector<RationalVector> tight;
    for (const auto& v : p.vertices()) {
      if (!h.satisfied_by(v)) return false;
      if (h.tight_at(v)) tight.push_back(v);
    }
    if (tight.size() < dim || rank_of_differences(tight) + 1 < dim) {
      return false;
    }
  }
  return true;
}

nlohmann::json to_json(const HalfSpace& h) {
  nlohmann::json normal = nlohmann::json::array();
  for (const auto& x : h.normal) normal.push_back(to_string(x));
  return {{"normal", std::move(normal)}, {"offset", to_string(h.offset)}};
}

nlohmann::json to_json(const Polytope& p) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    vertices.push_back(std::move(row));
  }
  nlohmann::json out = {{"dim", p.ambient_dim()},
                        {"vertices", std::move(vertices)}};
  if (p.facets()) {
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& h : *p.facets()) facets.push_back(to_json(h));
    out["facets"] = std::move(facets);
  }
  return out;
}

Polytope polytope_from_json(const nlohmann::json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<RationalVector> vertices;
    for (const auto& row : j.at("vertices")) {
      RationalVector v;
      for (const auto& x : row) v.push_back(parse_rational(x.get<std::string>()));
      vertices.push_back(std::move(v));
    }
    std::optional<std::vector<HalfSpace>> facets;
    if (j.contains("facets")) {
      facets.emplace();
      for (const auto& f : j.at("facets")) {
        HalfSpace h;
        for (const auto& x : f.at("normal")) {
          h.normal.emplace_back(x.get<std::string>(), 10);
        }
        h.offset = parse_rational(f.at("offset").get<std::string>());
        facets->push_back(std::move(h));
      }
    }
    return Polytope(dim, std::move(vertices), std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polytope JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed integer in polytope JSON"), 0);
  }
}

}  // namespace polynorm
