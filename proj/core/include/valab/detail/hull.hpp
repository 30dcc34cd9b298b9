#pragma once

// Internal hull machinery, exposed for tests and benchmarks.

#include <cstddef>
#include <span>
#include <vector>

#include "valab/vec.hpp"

namespace valab::detail {

/// A k-face as a tree of its facets. Vertex ids index the caller's point array.
struct Face {
  std::vector<std::size_t> vertices;  // sorted, extreme points only
  std::vector<Face> facets;
};

struct HullFacet {
  Vec normal;  // outward unit normal in the caller's coordinates
  double offset = 0;
  Face face;
};

enum class WrapStrategy {
  Automatic,   // monotone chain in 2-d, gift wrapping above
  GiftWrap,    // always gift wrapping (recursing down to 1-d)
};

/// Facets of the hull of points (all of dimension d, spanning R^d).
/// ids[i] is the id recorded for points[i]. eps is the absolute coplanarity
/// tolerance.
std::vector<HullFacet> wrap(std::span<const Vec> points, std::span<const std::size_t> ids, double eps,
                            WrapStrategy strategy = WrapStrategy::Automatic);

/// Fan triangulation of a face from its first vertex; each simplex is a list
/// of k+1 vertex ids.
std::vector<std::vector<std::size_t>> triangulate(const Face& face);

/// Orthonormal basis of the affine span of points, built by pivoted
/// Gram-Schmidt on differences from points[0]. Stops when residuals drop to eps.
std::vector<Vec> affine_span_basis(std::span<const Vec> points, double eps);

/// Integrals over a k-simplex embedded in R^n.
struct SimplexIntegrals {
  double measure = 0;
  Vec first;                    // int x
  std::vector<double> second;   // int x x^T, row-major n x n
};
SimplexIntegrals simplex_integrals(std::span<const Vec> vertices);

}  // namespace valab::detail
