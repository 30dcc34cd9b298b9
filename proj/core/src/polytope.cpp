#include "valab/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "valab/detail/hull.hpp"
#include "valab/error.hpp"

namespace valab {

namespace {

constexpr double kRelativeEps = 1e-9;

SymTensor matrix_to_sym(const std::vector<double>& m, std::size_t n) {
  SymTensor t(2, n);
  const auto& idx = multi_indices(2, n);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::size_t i = idx[k][0], j = idx[k][1];
    t.coeffs()[k] = 0.5 * (m[i * n + j] + m[j * n + i]);
  }
  return t;
}

void add_into(std::vector<double>& acc, const std::vector<double>& x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
}

}  // namespace

PolytopeBody PolytopeBody::from_points(std::span<const Vec> points) {
  if (points.empty()) throw DomainError("build_hull: no points");
  const std::size_t d = points[0].dim();
  for (const auto& p : points) {
    if (p.dim() != d) throw DimensionError("build_hull: points of mixed dimension");
    if (!p.all_finite()) throw DomainError("build_hull: non-finite coordinate");
  }

  Vec center(d);
  for (const auto& p : points) center += p;
  center /= static_cast<double>(points.size());
  double radius = 0.0;
  for (const auto& p : points) radius = std::max(radius, distance(p, center));
  if (!(radius > 0.0)) throw DegenerateBodyError(0, d);
  const double eps = kRelativeEps * radius;

  // Work in coordinates centred on the point average; drop exact duplicates
  // (and near duplicates above dimension 2, where the wrapper needs them gone).
  std::vector<Vec> shifted;
  shifted.reserve(points.size());
  for (const auto& p : points) shifted.push_back(p - center);
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = shifted[a];
    const auto& y = shifted[b];
    for (std::size_t k = 0; k < d; ++k) {
      if (x[k] != y[k]) return x[k] < y[k];
    }
    return a < b;
  });
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool dup = false;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      const Vec& o = shifted[*it];
      if (d > 2) {
        if (shifted[i][0] - o[0] > eps) break;
        if (distance(o, shifted[i]) <= eps) dup = true;
      } else {
        dup = o == shifted[i];
        break;
      }
      if (dup) break;
    }
    if (!dup) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Vec> local;
  std::vector<std::size_t> ids;
  local.reserve(kept.size());
  for (std::size_t i : kept) {
    local.push_back(shifted[i]);
    ids.push_back(i);
  }

  const std::size_t rank = detail::affine_span_basis(local, eps).size();
  if (rank < d) throw DegenerateBodyError(rank, d);

  const auto hull = detail::wrap(local, ids, eps);

  PolytopeBody body;
  body.dim_ = d;

  std::vector<std::size_t> vertex_ids;
  for (const auto& f : hull) vertex_ids.insert(vertex_ids.end(), f.face.vertices.begin(), f.face.vertices.end());
  std::sort(vertex_ids.begin(), vertex_ids.end());
  vertex_ids.erase(std::unique(vertex_ids.begin(), vertex_ids.end()), vertex_ids.end());
  std::vector<std::size_t> slot(points.size(), 0);
  for (std::size_t k = 0; k < vertex_ids.size(); ++k) {
    slot[vertex_ids[k]] = k;
    body.vertices_.push_back(points[vertex_ids[k]]);
  }

  body.vertex_average_ = Vec(d);
  for (const auto& v : body.vertices_) body.vertex_average_ += v;
  body.vertex_average_ /= static_cast<double>(body.vertices_.size());
  for (const auto& v : body.vertices_) {
    body.circumradius_ = std::max(body.circumradius_, distance(v, body.vertex_average_));
  }

  // Facet integrals from a fan triangulation of each facet; body integrals
  // from cones over those simplices with apex at the vertex average.
  const Vec& apex = body.vertex_average_;
  double volume = 0.0;
  Vec z(d);
  std::vector<double> second(d * d, 0.0);
  std::vector<Vec> simplex;
  for (const auto& hf : hull) {
    FacetData fd;
    fd.normal = hf.normal;
    fd.centroid = Vec(d);
    std::vector<double> fsecond(d * d, 0.0);
    for (const auto& s : detail::triangulate(hf.face)) {
      simplex.clear();
      for (std::size_t id : s) simplex.push_back(points[id]);
      const auto fi = detail::simplex_integrals(simplex);
      fd.measure += fi.measure;
      fd.centroid += fi.first;
      add_into(fsecond, fi.second);

      simplex.insert(simplex.begin(), apex);
      const auto ci = detail::simplex_integrals(simplex);
      volume += ci.measure;
      z += ci.first;
      add_into(second, ci.second);
    }
    if (!(fd.measure > 0.0)) continue;
    fd.centroid /= fd.measure;
    fd.moment2 = matrix_to_sym(fsecond, d);
    for (std::size_t id : hf.face.vertices) {
      fd.vertex_ids.push_back(slot[id]);
      fd.offset += dot(points[id], fd.normal);
    }
    fd.offset /= static_cast<double>(hf.face.vertices.size());
    body.facets_.push_back(std::move(fd));
  }
  body.moments_.volume = volume;
  body.moments_.z = z;
  body.moments_.psi2 = matrix_to_sym(second, d) * 0.5;
  return body;
}

double PolytopeBody::surface_area() const noexcept {
  double s = 0.0;
  for (const auto& f : facets_) s += f.measure;
  return s;
}

PolytopeBody build_hull(std::span<const Vec> points) { return PolytopeBody::from_points(points); }

VolumeMoments volume_and_moments(const PolytopeBody& p) { return p.moments(); }

double support(const PolytopeBody& p, const Vec& u) {
  if (u.dim() != p.dim()) throw DimensionError("support: dimension mismatch");
  if (!(u.norm() > 0.0)) throw DomainError("support: zero direction");
  double h = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) h = std::max(h, dot(v, u));
  return h;
}

PolytopeBody minkowski_sum(const PolytopeBody& p, const PolytopeBody& q) {
  if (p.dim() != q.dim()) throw DimensionError("minkowski_sum: dimension mismatch");
  std::vector<Vec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return PolytopeBody::from_points(sums);
}

PolytopeBody minkowski_sum(const PolytopeBody& p, const Vec& t) { return translate(p, t); }

PolytopeBody sweep(const PolytopeBody& p, const Vec& t) {
  if (t.dim() != p.dim()) throw DimensionError("sweep: dimension mismatch");
  std::vector<Vec> pts = p.vertices();
  pts.reserve(2 * pts.size());
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return PolytopeBody::from_points(pts);
}

PolytopeBody scale(const PolytopeBody& p, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("scale: factor must be positive (got " + std::to_string(lambda) + ")");
  }
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(v * lambda);
  return PolytopeBody::from_points(pts);
}

PolytopeBody translate(const PolytopeBody& p, const Vec& t) {
  if (t.dim() != p.dim()) throw DimensionError("translate: dimension mismatch");
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return PolytopeBody::from_points(pts);
}

PolytopeBody linear_image(const PolytopeBody& p, std::span<const double> matrix) {
  const std::size_t n = p.dim();
  if (matrix.size() != n * n) throw DimensionError("linear_image: matrix size mismatch");
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    Vec w(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) w[r] += matrix[r * n + c] * v[c];
    pts.push_back(w);
  }
  return PolytopeBody::from_points(pts);
}

std::vector<Vec> complement_basis(const Vec& u) {
  const std::size_t n = u.dim();
  if (!(u.norm() > 0.0)) throw DomainError("complement_basis: zero direction");
  const double s = u[n - 1] >= 0.0 ? -1.0 : 1.0;
  Vec w = Vec::unit(n, n - 1) - s * u;
  const double ww = dot(w, w);
  std::vector<Vec> basis;
  basis.reserve(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) basis.push_back(Vec::unit(n, j) - (2.0 * w[j] / ww) * w);
  return basis;
}

void require_unit(const Vec& u, const char* what) {
  if (!(std::abs(u.norm() - 1.0) <= 1e-12)) {
    throw DomainError(std::string(what) + ": direction is not a unit vector");
  }
}

Vec EmbeddedProjection::embed(const Vec& y) const {
  if (y.dim() != basis_.size()) throw DimensionError("embed: coordinate dimension mismatch");
  Vec x(direction_.dim());
  for (std::size_t k = 0; k < basis_.size(); ++k) x += y[k] * basis_[k];
  return x;
}

Vec EmbeddedProjection::coordinates(const Vec& x) const {
  Vec y(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) y[k] = dot(x, basis_[k]);
  return y;
}

EmbeddedProjection project(const PolytopeBody& p, const Vec& u) {
  if (u.dim() != p.dim()) throw DimensionError("project: dimension mismatch");
  if (p.dim() < 2) throw DimensionError("project: body must have dimension >= 2");
  require_unit(u, "project");
  auto basis = complement_basis(u);
  std::vector<Vec> shadow_pts;
  shadow_pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    Vec y(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) y[k] = dot(v, basis[k]);
    shadow_pts.push_back(y);
  }
  auto shadow = PolytopeBody::from_points(shadow_pts);
  return EmbeddedProjection(u, std::move(basis), std::move(shadow));
}

}  // namespace valab
