#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "valab/polytope.hpp"

namespace valab {

/// Axis-parallel box prod_i [lo_i, hi_i].
PolytopeBody box(const Vec& lo, const Vec& hi);
/// [a, b]^n.
PolytopeBody cube(std::size_t n, double a = 0.0, double b = 1.0);
/// conv{o, e_1, ..., e_n}.
PolytopeBody simplex(std::size_t n);
/// conv{+-e_i}.
PolytopeBody cross_polytope(std::size_t n);
/// Hull of `count` points uniform in [-half_width, half_width]^n.
PolytopeBody random_hull(std::size_t n, std::size_t count, double half_width, std::uint64_t seed);
/// random_hull(n, count, 1, seed) translated by a seeded offset in [0, 2]^n,
/// so that vector-valued functionals are generically nonzero.
PolytopeBody random_body(std::size_t n, std::uint64_t seed, std::size_t count = 12);

/// Seeded unit vectors and rotations for tests and harness runs.
Vec random_unit_vector(std::size_t n, std::uint64_t seed, std::uint64_t index);
/// Seeded orthogonal matrix (row-major n x n), Gram-Schmidt on Gaussian columns.
std::vector<double> random_orthogonal(std::size_t n, std::uint64_t seed);

}  // namespace valab
