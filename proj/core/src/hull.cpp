#include "valab/detail/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "valab/error.hpp"
#include "valab/polytope.hpp"

namespace valab::detail {

namespace {

using Index = std::size_t;

void remap(Face& f, std::span<const Index> map) {
  for (auto& v : f.vertices) v = map[v];
  std::sort(f.vertices.begin(), f.vertices.end());
  for (auto& g : f.facets) remap(g, map);
}

// Unit vector orthogonal to every vector in `spanning` (assumed orthonormal),
// chosen from the coordinate axes with the largest residual.
Vec orthogonal_unit(std::span<const Vec> spanning, std::size_t dim) {
  Vec best(dim);
  double best_norm = -1.0;
  for (std::size_t k = 0; k < dim; ++k) {
    Vec r = Vec::unit(dim, k);
    for (const auto& b : spanning) r -= dot(r, b) * b;
    const double nr = r.norm();
    if (nr > best_norm) {
      best_norm = nr;
      best = r;
    }
  }
  for (const auto& b : spanning) best -= dot(best, b) * b;
  return normalized(best);
}

std::vector<Vec> gather(std::span<const Vec> points, std::span<const Index> which) {
  std::vector<Vec> out;
  out.reserve(which.size());
  for (Index i : which) out.push_back(points[i]);
  return out;
}

std::vector<HullFacet> wrap_local(std::span<const Vec> points, double eps, WrapStrategy strategy);

// --- dimension 1 ------------------------------------------------------------

std::vector<HullFacet> wrap_1d(std::span<const Vec> points) {
  Index lo = 0, hi = 0;
  for (Index i = 1; i < points.size(); ++i) {
    if (points[i][0] < points[lo][0]) lo = i;
    if (points[i][0] > points[hi][0]) hi = i;
  }
  if (lo == hi) throw GeometryError("1-d hull of a single point");
  std::vector<HullFacet> out(2);
  out[0].normal = Vec{-1.0};
  out[0].offset = -points[lo][0];
  out[0].face.vertices = {lo};
  out[1].normal = Vec{1.0};
  out[1].offset = points[hi][0];
  out[1].face.vertices = {hi};
  return out;
}

// --- dimension 2: Andrew's monotone chain ----------------------------------

double cross(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<HullFacet> wrap_2d(std::span<const Vec> points, double eps) {
  std::vector<Index> order(points.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (points[a][0] != points[b][0]) return points[a][0] < points[b][0];
    return points[a][1] < points[b][1];
  });

  auto chain = [&](auto first, auto last) {
    std::vector<Index> h;
    for (auto it = first; it != last; ++it) {
      const Vec& p = points[*it];
      if (!h.empty() && distance(points[h.back()], p) <= eps) continue;
      while (h.size() >= 2) {
        const Vec& o = points[h[h.size() - 2]];
        if (cross(o, points[h.back()], p) > eps * distance(o, p)) break;
        h.pop_back();
      }
      h.push_back(*it);
    }
    return h;
  };
  std::vector<Index> lower = chain(order.begin(), order.end());
  std::vector<Index> upper = chain(order.rbegin(), order.rend());
  lower.pop_back();
  upper.pop_back();
  std::vector<Index> ring = std::move(lower);
  ring.insert(ring.end(), upper.begin(), upper.end());
  // Endpoints of the two chains can coincide within eps.
  std::vector<Index> poly;
  for (Index i : ring) {
    if (!poly.empty() && distance(points[poly.back()], points[i]) <= eps) continue;
    poly.push_back(i);
  }
  while (poly.size() > 1 && distance(points[poly.back()], points[poly.front()]) <= eps) poly.pop_back();
  if (poly.size() < 3) throw GeometryError("2-d hull collapsed to fewer than 3 vertices");

  std::vector<HullFacet> out;
  out.reserve(poly.size());
  for (Index k = 0; k < poly.size(); ++k) {
    const Index a = poly[k], b = poly[(k + 1) % poly.size()];
    const Vec d = points[b] - points[a];
    HullFacet f;
    f.normal = normalized(Vec{d[1], -d[0]});
    f.offset = 0.5 * (dot(f.normal, points[a]) + dot(f.normal, points[b]));
    f.face.vertices = {std::min(a, b), std::max(a, b)};
    f.face.facets = {Face{{a}, {}}, Face{{b}, {}}};
    out.push_back(std::move(f));
  }
  return out;
}

// --- general dimension: gift wrapping ---------------------------------------

class GiftWrapper {
 public:
  GiftWrapper(std::span<const Vec> points, double eps, WrapStrategy strategy)
      : pts_(points), eps_(eps), strategy_(strategy), dim_(points[0].dim()), interior_(dim_) {
    for (const auto& p : pts_) interior_ += p;
    interior_ /= static_cast<double>(pts_.size());
  }

  std::vector<HullFacet> run() {
    push_facet(initial_facet());
    for (std::size_t k = 0; k < facets_.size(); ++k) expand(k);
    std::vector<HullFacet> out;
    out.reserve(facets_.size());
    for (auto& f : facets_) out.push_back(std::move(f.hull));
    return out;
  }

 private:
  struct Working {
    HullFacet hull;
    std::vector<Index> on_plane;
  };

  std::vector<Index> on_plane(const Vec& normal, double offset) const {
    std::vector<Index> out;
    for (Index i = 0; i < pts_.size(); ++i) {
      if (std::abs(dot(pts_[i], normal) - offset) <= eps_) out.push_back(i);
    }
    return out;
  }

  // Refit a supporting hyperplane to the points it touches.
  void refine(Vec& normal, double& offset, std::vector<Index>& plane) const {
    for (int iter = 0; iter < 3; ++iter) {
      const auto sub = gather(pts_, plane);
      const auto basis = affine_span_basis(sub, eps_);
      if (basis.size() + 1 != dim_) throw GeometryError("facet candidate is not a hyperplane");
      Vec n = orthogonal_unit(basis, dim_);
      if (dot(n, interior_ - pts_[plane[0]]) > 0.0) n = -n;
      double off = -std::numeric_limits<double>::infinity();
      for (Index i : plane) off = std::max(off, dot(pts_[i], n));
      normal = n;
      offset = off;
      auto next = on_plane(normal, offset);
      if (next == plane) return;
      plane = std::move(next);
    }
  }

  Working initial_facet() const {
    Vec nu = -Vec::unit(dim_, 0);
    double off = -std::numeric_limits<double>::infinity();
    for (const auto& p : pts_) off = std::max(off, dot(p, nu));
    auto plane = on_plane(nu, off);
    for (;;) {
      const auto sub = gather(pts_, plane);
      auto basis = affine_span_basis(sub, eps_);
      if (basis.size() + 1 >= dim_) break;
      // Rotate the supporting hyperplane about aff(plane) until it meets a
      // new point.
      basis.push_back(nu);
      const Vec w = orthogonal_unit(basis, dim_);
      const Vec& r0 = pts_[plane[0]];
      const auto pick = rotate_about(r0, nu, w);
      nu = pick;
      off = dot(r0, nu);
      plane = on_plane(nu, off);
    }
    Working f;
    f.on_plane = std::move(plane);
    refine(nu, off, f.on_plane);
    f.hull.normal = nu;
    f.hull.offset = off;
    return f;
  }

  // New normal obtained by rotating `nu` towards `w` about a flat through r0
  // until the hyperplane hits a point not on the current one.
  Vec rotate_about(const Vec& r0, const Vec& nu, const Vec& w) const {
    double best_phi = -std::numeric_limits<double>::infinity();
    double best_a = 0.0, best_b = 0.0;
    for (const auto& p : pts_) {
      const Vec d = p - r0;
      const double a = dot(d, nu);
      if (a >= -eps_) continue;
      const double b = dot(d, w);
      const double phi = std::atan2(b, -a);
      if (phi > best_phi) {
        best_phi = phi;
        best_a = a;
        best_b = b;
      }
    }
    if (!std::isfinite(best_phi)) throw GeometryError("hull wrap found no point off the current plane");
    return normalized(best_b * nu - best_a * w);
  }

  bool known(const Vec& normal, double offset) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const Working& f) {
      return dot(f.hull.normal, normal) > 1.0 - 1e-9 && std::abs(f.hull.offset - offset) <= eps_;
    });
  }

  void push_facet(Working f) {
    // Ridges: hull of the facet's points inside the facet hyperplane.
    const auto basis = complement_basis(f.hull.normal);
    std::vector<Vec> local;
    local.reserve(f.on_plane.size());
    for (Index i : f.on_plane) {
      Vec y(dim_ - 1);
      for (std::size_t k = 0; k + 1 < dim_; ++k) y[k] = dot(pts_[i], basis[k]);
      local.push_back(y);
    }
    auto ridges = wrap_local(local, eps_, strategy_);
    for (auto& r : ridges) {
      remap(r.face, f.on_plane);
      Vec w(dim_);
      for (std::size_t k = 0; k + 1 < dim_; ++k) w += r.normal[k] * basis[k];
      r.normal = w;
    }
    std::vector<Index> verts;
    for (const auto& r : ridges) verts.insert(verts.end(), r.face.vertices.begin(), r.face.vertices.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    f.hull.face.vertices = std::move(verts);
    ridge_normals_.push_back({});
    for (auto& r : ridges) {
      ridge_normals_.back().push_back(r.normal);
      f.hull.face.facets.push_back(std::move(r.face));
    }
    facets_.push_back(std::move(f));
  }

  void expand(std::size_t k) {
    for (std::size_t j = 0; j < facets_[k].hull.face.facets.size(); ++j) {
      const Vec nu = facets_[k].hull.normal;
      const Vec w = ridge_normals_[k][j];
      const Vec r0 = pts_[facets_[k].hull.face.facets[j].vertices.front()];
      Vec next = rotate_about(r0, nu, w);
      double off = dot(r0, next);
      auto plane = on_plane(next, off);
      refine(next, off, plane);
      if (known(next, off)) continue;
      Working f;
      f.hull.normal = next;
      f.hull.offset = off;
      f.on_plane = std::move(plane);
      push_facet(std::move(f));
    }
  }

  std::span<const Vec> pts_;
  double eps_;
  WrapStrategy strategy_;
  std::size_t dim_;
  Vec interior_;
  std::vector<Working> facets_;
  std::vector<std::vector<Vec>> ridge_normals_;
};

std::vector<HullFacet> wrap_local(std::span<const Vec> points, double eps, WrapStrategy strategy) {
  if (points.empty()) throw GeometryError("hull of an empty point set");
  const std::size_t d = points[0].dim();
  if (d == 1) return wrap_1d(points);
  if (d == 2 && strategy == WrapStrategy::Automatic) return wrap_2d(points, eps);
  return GiftWrapper(points, eps, strategy).run();
}

}  // namespace

std::vector<HullFacet> wrap(std::span<const Vec> points, std::span<const std::size_t> ids, double eps,
                            WrapStrategy strategy) {
  if (ids.size() != points.size()) throw DomainError("wrap: ids and points differ in length");
  auto facets = wrap_local(points, eps, strategy);
  for (auto& f : facets) remap(f.face, ids);
  return facets;
}

std::vector<std::vector<std::size_t>> triangulate(const Face& face) {
  if (face.facets.empty()) return {{face.vertices.front()}};
  const std::size_t apex = face.vertices.front();
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : face.facets) {
    if (std::binary_search(g.vertices.begin(), g.vertices.end(), apex)) continue;
    for (auto& s : triangulate(g)) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Vec> affine_span_basis(std::span<const Vec> points, double eps) {
  std::vector<Vec> basis;
  if (points.empty()) return basis;
  const std::size_t dim = points[0].dim();
  std::vector<Vec> residual;
  residual.reserve(points.size());
  for (const auto& p : points) residual.push_back(p - points[0]);
  while (basis.size() < dim) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < residual.size(); ++i) {
      const double r = residual[i].norm();
      if (r > best_norm) {
        best_norm = r;
        best = i;
      }
    }
    if (best_norm <= eps) break;
    Vec b = residual[best];
    for (const auto& q : basis) b -= dot(b, q) * q;
    b = normalized(b);
    for (auto& r : residual) r -= dot(r, b) * b;
    basis.push_back(b);
  }
  return basis;
}

namespace {

double determinant(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    if (a[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

}  // namespace

SimplexIntegrals simplex_integrals(std::span<const Vec> v) {
  const std::size_t k = v.size() - 1;
  const std::size_t n = v[0].dim();
  SimplexIntegrals out;
  double factorial = 1.0;
  for (std::size_t j = 2; j <= k; ++j) factorial *= static_cast<double>(j);
  if (k == 0) {
    out.measure = 1.0;
  } else if (k == n) {
    std::vector<double> e(n * n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < n; ++c) e[i * n + c] = v[i + 1][c] - v[0][c];
    out.measure = std::abs(determinant(std::move(e), n)) / factorial;
  } else {
    std::vector<Vec> e;
    for (std::size_t i = 1; i <= k; ++i) e.push_back(v[i] - v[0]);
    std::vector<double> gram(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) gram[i * k + j] = dot(e[i], e[j]);
    out.measure = std::sqrt(std::max(0.0, determinant(std::move(gram), k))) / factorial;
  }
  Vec sum(n);
  for (const auto& p : v) sum += p;
  out.first = sum * (out.measure / static_cast<double>(k + 1));
  out.second.assign(n * n, 0.0);
  const double w = out.measure / static_cast<double>((k + 1) * (k + 2));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double s = sum[r] * sum[c];
      for (const auto& p : v) s += p[r] * p[c];
      out.second[r * n + c] = w * s;
    }
  }
  return out;
}

}  // namespace valab::detail
