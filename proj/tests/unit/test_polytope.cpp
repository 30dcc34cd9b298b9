#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "valab/body_io.hpp"
#include "valab/detail/hull.hpp"
#include "valab/error.hpp"
#include "valab/generators.hpp"
#include "valab/polytope.hpp"
#include "valab/valuations.hpp"

using namespace valab;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

PolytopeBody triangle() { return build_hull(std::vector<Vec>{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}); }

PolytopeBody octahedron() { return cross_polytope(3); }

const FacetData* facet_with_normal(const PolytopeBody& p, const Vec& u) {
  for (const auto& f : p.facets()) {
    if (distance(f.normal, u) < 1e-9) return &f;
  }
  return nullptr;
}

// Unit normal of the hyperplane through n points in R^n, via cofactors of the
// (n-1) x n difference matrix. Zero if the points are affinely dependent.
Vec hyperplane_normal(const std::vector<Vec>& pts) {
  const std::size_t n = pts[0].dim();
  std::vector<std::vector<double>> m(n - 1, std::vector<double>(n));
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = pts[r + 1][c] - pts[0][c];
  auto det = [](std::vector<std::vector<double>> a) {
    const std::size_t k = a.size();
    double d = 1.0;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < k; ++r)
        if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
      if (a[piv][c] == 0.0) return 0.0;
      if (piv != c) {
        std::swap(a[piv], a[c]);
        d = -d;
      }
      d *= a[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        const double f = a[r][c] / a[c][c];
        for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      }
    }
    return d;
  };
  Vec nu(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor(n - 1, std::vector<double>(n - 1));
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor[r][jj++] = m[r][j];
    nu[c] = ((c % 2) ? -1.0 : 1.0) * det(minor);
  }
  const double len = nu.norm();
  return len < 1e-12 ? Vec(n) : nu / len;
}

// Brute-force facet normals: every n-subset spanning a supporting hyperplane.
std::vector<Vec> brute_force_facet_normals(const std::vector<Vec>& pts) {
  const std::size_t n = pts[0].dim();
  const std::size_t m = pts.size();
  std::vector<Vec> normals;
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (;;) {
    std::vector<Vec> sub;
    for (auto i : pick) sub.push_back(pts[i]);
    Vec nu = hyperplane_normal(sub);
    if (nu.norm() > 0.5) {
      const double off = dot(nu, sub[0]);
      double lo = 0.0, hi = 0.0;
      for (const auto& p : pts) {
        lo = std::min(lo, dot(nu, p) - off);
        hi = std::max(hi, dot(nu, p) - off);
      }
      if (hi <= 1e-9 || lo >= -1e-9) {
        if (hi > 1e-9) nu = -nu;
        const bool seen = std::any_of(normals.begin(), normals.end(), [&](const Vec& o) { return distance(o, nu) < 1e-7; });
        if (!seen) normals.push_back(nu);
      }
    }
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == m - n + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return normals;
}

std::vector<Vec> random_points(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Vec p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = uni(gen);
    pts.push_back(p);
  }
  return pts;
}

std::vector<PolytopeBody> generator_bodies(std::size_t n) {
  std::vector<PolytopeBody> out{cube(n), simplex(n), cross_polytope(n)};
  for (std::uint64_t s = 1; s <= 3; ++s) out.push_back(random_body(n, s));
  return out;
}

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("unit square") {
    const auto sq = build_hull(std::vector<Vec>{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
    REQUIRE(sq.facets().size() == 4);
    for (const Vec& u : {Vec{1.0, 0.0}, Vec{-1.0, 0.0}, Vec{0.0, 1.0}, Vec{0.0, -1.0}}) {
      const auto* f = facet_with_normal(sq, u);
      REQUIRE(f != nullptr);
      CHECK(f->measure == doctest::Approx(1.0).epsilon(1e-14));
    }
  }

  TEST_CASE("cube with an interior point") {
    std::vector<Vec> pts;
    for (int m = 0; m < 8; ++m) pts.push_back(Vec{double(m & 1), double((m >> 1) & 1), double((m >> 2) & 1)});
    pts.push_back(Vec{0.5, 0.5, 0.5});
    const auto c = build_hull(pts);
    CHECK(c.facets().size() == 6);
    CHECK(c.vertices().size() == 8);
    CHECK(std::find(c.vertices().begin(), c.vertices().end(), Vec{0.5, 0.5, 0.5}) == c.vertices().end());
  }

  TEST_CASE("octahedron facets") {
    const auto o = octahedron();
    REQUIRE(o.facets().size() == 8);
    for (const auto& f : o.facets()) {
      for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(f.normal[i]) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
      CHECK(f.measure == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
      CHECK(f.vertex_ids.size() == 3);
    }
  }

  TEST_CASE("coplanar faces are merged") {
    // Prism over a square with midpoints on every edge.
    std::vector<Vec> pts;
    for (double z : {0.0, 1.0})
      for (double x : {0.0, 0.5, 1.0})
        for (double y : {0.0, 0.5, 1.0}) pts.push_back(Vec{x, y, z});
    const auto b = build_hull(pts);
    CHECK(b.facets().size() == 6);
    CHECK(b.vertices().size() == 8);
    CHECK(b.volume() == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("degenerate input names the affine rank") {
    std::vector<Vec> flat{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {1.0, 1.0, 0.0}};
    try {
      build_hull(flat);
      FAIL("expected a degeneracy error");
    } catch (const DegenerateBodyError& e) {
      CHECK(e.affine_rank() == 2);
      CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK_THROWS_AS(build_hull(std::vector<Vec>{{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}}), DegenerateBodyError);
    CHECK_THROWS_AS(build_hull(std::vector<Vec>{{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}}), DegenerateBodyError);
  }

  TEST_CASE("volume and moments examples") {
    const auto c = cube(3);
    CHECK(c.volume() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(distance(c.moment(), Vec{0.5, 0.5, 0.5}) < 1e-14);
    const auto t = triangle();
    CHECK(t.volume() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(distance(t.moment(), Vec{1.0 / 6.0, 1.0 / 6.0}) < 1e-14);
    const auto o = octahedron();
    CHECK(o.volume() == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(o.moment().norm() < 1e-14);
    // psi2 of the unit cube: (1/2) int x_i x_j = 1/6 on the diagonal, 1/8 off it.
    const double d[] = {1.0 / 6.0, 1.0 / 8.0};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const std::array<std::size_t, 2> ij{i, j};
        CHECK(c.psi2().component(ij) == doctest::Approx(d[i == j ? 0 : 1]).epsilon(1e-13));
      }
  }

  TEST_CASE("support examples") {
    CHECK(support(cube(3), Vec::unit(3, 2)) == 1.0);
    const double s = 1.0 / std::sqrt(3.0);
    CHECK(support(octahedron(), Vec{s, s, s}) == doctest::Approx(s).epsilon(1e-15));
    CHECK(support(cube(2, -1.0, 1.0), Vec{0.6, 0.8}) == doctest::Approx(1.4).epsilon(1e-15));
    CHECK_THROWS_AS(support(cube(3), Vec(3)), DomainError);
  }

  TEST_CASE("minkowski sum examples") {
    const auto sq = cube(2);
    const auto sum = minkowski_sum(sq, sq);
    CHECK(sum.volume() == doctest::Approx(4.0));
    CHECK(support(sum, Vec{1.0, 0.0}) == doctest::Approx(2.0));
    CHECK(support(sum, Vec{-1.0, 0.0}) == doctest::Approx(0.0));
    const Vec t{0.25, -3.0};
    const auto moved = minkowski_sum(sq, t);
    CHECK(distance(moved.moment(), sq.moment() + t * sq.volume()) < 1e-14);
    const double eps = 0.125;
    const auto prism = sweep(cube(3), Vec::unit(3, 2) * eps);
    CHECK(prism.volume() == doctest::Approx(1.0 + eps).epsilon(1e-14));
    CHECK(support(prism, Vec::unit(3, 2)) == doctest::Approx(1.0 + eps));
    CHECK_THROWS_AS(minkowski_sum(cube(2), cube(3)), DimensionError);
  }

  TEST_CASE("minkowski support additivity") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto p = random_body(n, 11);
      const auto q = random_hull(n, 9, 0.5, 12);
      const auto s = minkowski_sum(p, q);
      for (std::uint64_t i = 0; i < 50; ++i) {
        const Vec u = random_unit_vector(n, 5, i);
        CHECK(std::abs(support(s, u) - support(p, u) - support(q, u)) <= 1e-10);
      }
    }
  }

  TEST_CASE("scale and translate examples") {
    CHECK(scale(cube(3), 2.0).volume() == doctest::Approx(8.0));
    const auto t = translate(triangle(), Vec{1.0, 0.0});
    CHECK(distance(t.moment(), Vec{1.0 / 6.0 + 0.5, 1.0 / 6.0}) < 1e-14);
    const auto p = random_body(3, 4);
    const auto same = scale(p, 1.0);
    CHECK(same.vertices() == p.vertices());
    CHECK(same.volume() == p.volume());
    CHECK_THROWS_AS(scale(p, 0.0), DomainError);
    CHECK_THROWS_AS(scale(p, -1.0), DomainError);
  }

  TEST_CASE("projection examples") {
    const auto c = cube(3);
    const auto a = project(c, Vec::unit(3, 2));
    CHECK(a.shadow().dim() == 2);
    CHECK(a.shadow().volume() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(project(octahedron(), Vec::unit(3, 2)).shadow().volume() == doctest::Approx(2.0).epsilon(1e-14));
    const double s = 1.0 / std::sqrt(3.0);
    const auto h = project(c, Vec{s, s, s});
    CHECK(h.shadow().vertices().size() == 6);
    CHECK(h.shadow().volume() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
    CHECK_THROWS_AS(project(c, Vec{1.0, 1.0, 0.0}), DomainError);
  }

  TEST_CASE("projection basis is orthonormal and every shadow vertex has a preimage") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto p = random_body(n, 21);
      for (std::uint64_t i = 0; i < 10; ++i) {
        const Vec u = random_unit_vector(n, 8, i);
        const auto pr = project(p, u);
        for (std::size_t a = 0; a + 1 < n; ++a) {
          CHECK(std::abs(dot(pr.basis()[a], u)) <= 1e-12);
          for (std::size_t b = 0; b + 1 < n; ++b) {
            CHECK(std::abs(dot(pr.basis()[a], pr.basis()[b]) - (a == b ? 1.0 : 0.0)) <= 1e-12);
          }
        }
        for (const auto& y : pr.shadow().vertices()) {
          const bool found = std::any_of(p.vertices().begin(), p.vertices().end(),
                                         [&](const Vec& v) { return distance(pr.coordinates(v), y) <= 1e-12; });
          CHECK(found);
        }
        CHECK(complement_basis(u) == complement_basis(-u));
      }
    }
  }

  TEST_CASE("facet set matches a brute-force supporting-hyperplane search") {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::uint64_t s = 0; s < 4; ++s) {
        const auto pts = random_points(n, 10 + 2 * n, 100 * n + s);
        const auto body = build_hull(pts);
        const auto oracle = brute_force_facet_normals(pts);
        CHECK(body.facets().size() == oracle.size());
        for (const auto& f : body.facets()) {
          const bool match = std::any_of(oracle.begin(), oracle.end(), [&](const Vec& o) { return distance(o, f.normal) < 1e-7; });
          CHECK(match);
        }
      }
    }
    // Cube and cross-polytope with many coplanar points.
    for (std::size_t n = 3; n <= 4; ++n) {
      CHECK(cube(n).facets().size() == brute_force_facet_normals(cube(n).vertices()).size());
      CHECK(cross_polytope(n).facets().size() == brute_force_facet_normals(cross_polytope(n).vertices()).size());
    }
  }

  TEST_CASE("monotone chain agrees with gift wrapping in the plane") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto pts = random_points(2, 5 + s, 700 + s);
      std::vector<std::size_t> ids(pts.size());
      std::iota(ids.begin(), ids.end(), std::size_t{0});
      auto a = detail::wrap(pts, ids, 1e-12, detail::WrapStrategy::Automatic);
      auto b = detail::wrap(pts, ids, 1e-12, detail::WrapStrategy::GiftWrap);
      REQUIRE(a.size() == b.size());
      auto key = [](const detail::HullFacet& f) { return f.face.vertices; };
      std::vector<std::vector<std::size_t>> ka, kb;
      for (const auto& f : a) ka.push_back(key(f));
      for (const auto& f : b) kb.push_back(key(f));
      std::sort(ka.begin(), ka.end());
      std::sort(kb.begin(), kb.end());
      CHECK(ka == kb);
    }
  }

  TEST_CASE("simplex second moment against a Monte Carlo oracle") {
    const std::vector<Vec> tet{{0.1, 0.2, -0.3}, {1.4, 0.0, 0.2}, {0.3, 1.1, 0.5}, {-0.2, 0.4, 1.3}};
    const auto exact = detail::simplex_integrals(tet);
    std::mt19937_64 gen(2024);
    std::exponential_distribution<double> expo(1.0);
    const int samples = 400000;
    std::vector<double> mean(9, 0.0), m2(9, 0.0);
    for (int s = 0; s < samples; ++s) {
      double w[4], tot = 0.0;
      for (double& x : w) tot += (x = expo(gen));
      Vec x(3);
      for (int k = 0; k < 4; ++k) x += tet[k] * (w[k] / tot);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const double v = x[i] * x[j];
          const std::size_t k = 3 * i + j;
          const double d = v - mean[k];
          mean[k] += d / (s + 1);
          m2[k] += d * (v - mean[k]);
        }
    }
    for (std::size_t k = 0; k < 9; ++k) {
      const double est = exact.measure * mean[k];
      const double se = exact.measure * std::sqrt(m2[k] / (samples - 1) / samples);
      CHECK(std::abs(est - exact.second[k]) <= 4.0 * se + 1e-12);
    }
    // Lower-dimensional simplex embedded in R^3: triangle in z = 0.
    const std::vector<Vec> tri{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    const auto ti = detail::simplex_integrals(tri);
    CHECK(ti.measure == doctest::Approx(0.5));
    CHECK(ti.second[0] == doctest::Approx(1.0 / 12.0));
    CHECK(ti.second[1] == doctest::Approx(1.0 / 24.0));
  }

  TEST_CASE("closed surface, supporting facets, vertex incidence") {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (const auto& p : generator_bodies(n)) {
        Vec s(n);
        for (const auto& f : p.facets()) {
          s += f.normal * f.measure;
          CHECK(std::abs(f.normal.norm() - 1.0) <= 1e-12);
          CHECK(f.measure > 0.0);
          CHECK(std::abs(dot(f.centroid, f.normal) - f.offset) <= 1e-9 * (1.0 + p.circumradius()));
          for (const auto& v : p.vertices()) CHECK(dot(v, f.normal) <= f.offset + 1e-9);
        }
        CHECK(s.norm() <= 1e-10 * p.surface_area());
        std::vector<int> incidence(p.vertices().size(), 0);
        for (const auto& f : p.facets())
          for (auto id : f.vertex_ids) ++incidence[id];
        for (int k : incidence) CHECK(k >= static_cast<int>(n));
      }
    }
  }

  TEST_CASE("divergence theorem volume") {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (const auto& p : generator_bodies(n)) {
        double v = 0.0;
        for (const auto& f : p.facets()) v += f.offset * f.measure;
        CHECK(rel(v / static_cast<double>(n), p.volume()) <= 1e-10);
      }
    }
  }

  TEST_CASE("facet second moment trace identity") {
    // For a facet F with centroid c: int_F <x - c, x - c> >= 0 and
    // int_F x = measure * c, so tr(moment2) - measure |c|^2 >= 0.
    for (const auto& p : generator_bodies(3)) {
      for (const auto& f : p.facets()) {
        double tr = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
          const std::array<std::size_t, 2> ii{i, i};
          tr += f.moment2.component(ii);
        }
        CHECK(tr - f.measure * dot(f.centroid, f.centroid) >= -1e-12);
        // Normal direction carries no spread: moment2(nu, nu) = measure * offset^2.
        const std::array<Vec, 2> nn{f.normal, f.normal};
        CHECK(f.moment2.evaluate(nn) == doctest::Approx(f.measure * f.offset * f.offset).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("homogeneity") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto p = random_body(n, 31);
      for (double lambda : {0.5, 2.0, 3.0}) {
        const auto q = scale(p, lambda);
        CHECK(rel(q.volume(), std::pow(lambda, n) * p.volume()) <= 1e-10);
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(std::abs(q.moment()[i] - std::pow(lambda, n + 1) * p.moment()[i]) <=
                1e-10 * std::pow(lambda, n + 1) * p.moment().norm_inf());
        }
      }
    }
  }

  TEST_CASE("body json and specs") {
    const auto p = random_body(3, 5);
    const auto q = body_from_json(body_to_json(p));
    CHECK(q.vertices() == p.vertices());
    CHECK(parse_body_spec("cube", 2).volume() == doctest::Approx(1.0));
    CHECK(parse_body_spec("cube:-1:1", 3).volume() == doctest::Approx(8.0));
    CHECK(parse_body_spec("simplex", 3).volume() == doctest::Approx(1.0 / 6.0));
    CHECK(parse_body_spec("cross_polytope", 4).volume() == doctest::Approx(16.0 / 24.0));
    CHECK(parse_body_spec("random:5", 3).vertices() == p.vertices());
    CHECK_THROWS_AS(parse_body_spec("sphere", 3), DomainError);
    CHECK_THROWS(parse_body_spec("missing_file.json", 3));
  }
}
