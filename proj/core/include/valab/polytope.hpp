#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "valab/sym_tensor.hpp"
#include "valab/vec.hpp"

namespace valab {

/// One facet of a full-dimensional polytope.
struct FacetData {
  Vec normal;          // outward unit normal
  double offset = 0;   // h_K(normal)
  double measure = 0;  // (n-1)-volume
  Vec centroid;
  SymTensor moment2;   // integral of x^2 over the facet
  std::vector<std::size_t> vertex_ids;  // indices into PolytopeBody::vertices()
};

/// Volume, first moment z = int_K x dx and Psi_2 = (1/2) int_K x^2 dx.
struct VolumeMoments {
  double volume = 0;
  Vec z;
  SymTensor psi2;
};

/// Full-dimensional convex polytope in R^n given by its hull vertices, with
/// facet data and volume moments computed at construction. Immutable.
class PolytopeBody {
 public:
  /// Convex hull of the given points; interior and duplicate points are
  /// dropped. Throws DegenerateBodyError if the points do not span R^n.
  static PolytopeBody from_points(std::span<const Vec> points);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Vec>& vertices() const noexcept { return vertices_; }
  const std::vector<FacetData>& facets() const noexcept { return facets_; }

  double volume() const noexcept { return moments_.volume; }
  const Vec& moment() const noexcept { return moments_.z; }
  const SymTensor& psi2() const noexcept { return moments_.psi2; }
  const VolumeMoments& moments() const noexcept { return moments_; }

  double surface_area() const noexcept;
  const Vec& vertex_average() const noexcept { return vertex_average_; }
  /// Largest distance from the vertex average to a vertex.
  double circumradius() const noexcept { return circumradius_; }

 private:
  PolytopeBody() = default;

  std::size_t dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<FacetData> facets_;
  VolumeMoments moments_;
  Vec vertex_average_;
  double circumradius_ = 0;
};

PolytopeBody build_hull(std::span<const Vec> points);

VolumeMoments volume_and_moments(const PolytopeBody& p);

/// h_P(u) = max over vertices of <v, u>. u must be nonzero.
double support(const PolytopeBody& p, const Vec& u);

PolytopeBody minkowski_sum(const PolytopeBody& p, const PolytopeBody& q);

/// Minkowski sum with the single point {t}.
PolytopeBody minkowski_sum(const PolytopeBody& p, const Vec& t);

/// P + [o, t], the body swept along the segment from o to t.
PolytopeBody sweep(const PolytopeBody& p, const Vec& t);

/// lambda * P for lambda > 0.
PolytopeBody scale(const PolytopeBody& p, double lambda);

PolytopeBody translate(const PolytopeBody& p, const Vec& t);

/// Applies the linear map x -> M x, M given row-major as dim x dim.
PolytopeBody linear_image(const PolytopeBody& p, std::span<const double> matrix);

/// Orthonormal basis of u-perp: columns 1..n-1 of the Householder reflection
/// that sends e_n to -sign(u_n) u. Deterministic in u and shared by u and -u.
std::vector<Vec> complement_basis(const Vec& u);

/// Orthogonal projection of a body onto u-perp, expressed in the coordinates
/// of complement_basis(u).
class EmbeddedProjection {
 public:
  EmbeddedProjection(Vec direction, std::vector<Vec> basis, PolytopeBody shadow)
      : direction_(direction), basis_(std::move(basis)), shadow_(std::move(shadow)) {}

  const Vec& direction() const noexcept { return direction_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const PolytopeBody& shadow() const noexcept { return shadow_; }

  /// Basis coordinates -> point of u-perp in R^n.
  Vec embed(const Vec& y) const;
  /// Point of R^n -> basis coordinates of its projection.
  Vec coordinates(const Vec& x) const;

 private:
  Vec direction_;
  std::vector<Vec> basis_;
  PolytopeBody shadow_;
};

/// Throws DomainError unless |u| = 1 to 1e-12.
void require_unit(const Vec& u, const char* what);

EmbeddedProjection project(const PolytopeBody& p, const Vec& u);

}  // namespace valab
