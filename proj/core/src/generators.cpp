#include "valab/generators.hpp"

#include <cmath>
#include <vector>

#include "valab/error.hpp"
#include "valab/philox.hpp"

namespace valab {

namespace {

// Stream tags keep generator draws disjoint from sphere sampling.
constexpr std::uint32_t kHullStream = 0x48554c4c;    // "HULL"
constexpr std::uint32_t kOffsetStream = 0x4f464653;  // "OFFS"
constexpr std::uint32_t kDirStream = 0x44495253;     // "DIRS"
constexpr std::uint32_t kRotStream = 0x524f5441;     // "ROTA"

}  // namespace

PolytopeBody box(const Vec& lo, const Vec& hi) {
  require_same_dim(lo, hi, "box");
  const std::size_t n = lo.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(hi[i] > lo[i])) throw DomainError("box: empty interval on some axis");
  }
  std::vector<Vec> pts;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1u ? hi[i] : lo[i];
    pts.push_back(p);
  }
  return PolytopeBody::from_points(pts);
}

PolytopeBody cube(std::size_t n, double a, double b) {
  Vec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = a;
    hi[i] = b;
  }
  return box(lo, hi);
}

PolytopeBody simplex(std::size_t n) {
  std::vector<Vec> pts{Vec(n)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Vec::unit(n, i));
  return PolytopeBody::from_points(pts);
}

PolytopeBody cross_polytope(std::size_t n) {
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(Vec::unit(n, i));
    pts.push_back(-Vec::unit(n, i));
  }
  return PolytopeBody::from_points(pts);
}

PolytopeBody random_hull(std::size_t n, std::size_t count, double half_width, std::uint64_t seed) {
  if (count < n + 1) throw DomainError("random_hull: need at least n + 1 points");
  const CounterRng rng(seed, kHullStream);
  std::vector<Vec> pts;
  pts.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = half_width * (2.0 * rng.uniform(k, i) - 1.0);
    pts.push_back(p);
  }
  return PolytopeBody::from_points(pts);
}

PolytopeBody random_body(std::size_t n, std::uint64_t seed, std::size_t count) {
  const CounterRng rng(seed, kOffsetStream);
  Vec offset(n);
  for (std::size_t i = 0; i < n; ++i) offset[i] = 2.0 * rng.uniform(0, i);
  return translate(random_hull(n, count, 1.0, seed), offset);
}

Vec random_unit_vector(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  const CounterRng rng(seed, kDirStream);
  return rng.unit_vector(index, n);
}

std::vector<double> random_orthogonal(std::size_t n, std::uint64_t seed) {
  const CounterRng rng(seed, kRotStream);
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < n; ++c) {
    Vec g = rng.gaussian_vector(c, n);
    for (const auto& q : cols) g -= dot(g, q) * q;
    for (const auto& q : cols) g -= dot(g, q) * q;
    cols.push_back(normalized(g));
  }
  std::vector<double> m(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r * n + c] = cols[c][r];
  return m;
}

}  // namespace valab
