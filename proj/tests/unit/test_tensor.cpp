#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "valab/error.hpp"
#include "valab/generators.hpp"
#include "valab/philox.hpp"
#include "valab/sym_tensor.hpp"

using namespace valab;

namespace {

Vec seeded_vec(std::size_t n, std::uint64_t index) {
  return CounterRng(99, 7).gaussian_vector(index, n);
}

double comp(const SymTensor& t, std::initializer_list<std::size_t> idx) {
  return t.component(std::span<const std::size_t>(idx.begin(), idx.size()));
}

}  // namespace

TEST_SUITE("tensor") {
  TEST_CASE("kappa and omega") {
    CHECK(kappa(0) == 1.0);
    CHECK(kappa(1) == 2.0);
    CHECK(kappa(2) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    CHECK(kappa(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-15));
    for (int k = 0; k <= 8; ++k) {
      const double gamma_form = std::pow(std::numbers::pi, k / 2.0) / std::tgamma(k / 2.0 + 1.0);
      CHECK(kappa(k) == doctest::Approx(gamma_form).epsilon(1e-14));
      CHECK(omega(k) == doctest::Approx(k * kappa(k)).epsilon(1e-15));
    }
    for (int k = 2; k <= 10; ++k) {
      CHECK(kappa(k) == doctest::Approx(kappa(k - 2) * 2.0 * std::numbers::pi / k).epsilon(1e-14));
    }
    CHECK_THROWS_AS(kappa(-1), DomainError);
  }

  TEST_CASE("multi-index storage") {
    const auto& idx = multi_indices(2, 3);
    REQUIRE(idx.size() == 6);
    CHECK(idx[0][0] == 0);
    CHECK(idx[0][1] == 0);
    CHECK(idx[1][1] == 1);
    CHECK(idx[5][0] == 2);
    CHECK(multi_indices(0, 4).size() == 1);
    CHECK(multi_indices(4, 5).size() == 70);
    for (int r = 0; r <= kMaxRank; ++r) {
      const auto& all = multi_indices(r, 4);
      for (std::size_t k = 0; k < all.size(); ++k) {
        CHECK(storage_offset(std::span<const std::uint8_t>(all[k].idx.data(), static_cast<std::size_t>(r)), 4) == k);
      }
    }
  }

  TEST_CASE("sym_power examples") {
    const auto e1sq = sym_power(Vec::unit(2, 0), 2);
    REQUIRE(e1sq.size() == 3);
    CHECK(comp(e1sq, {0, 0}) == 1.0);
    CHECK(comp(e1sq, {0, 1}) == 0.0);
    CHECK(comp(e1sq, {1, 1}) == 0.0);
    CHECK(sym_power(Vec{1.0, 1.0}, 1).to_vec() == Vec{1.0, 1.0});
    CHECK(sym_power(Vec{2.0, -3.0, 5.0}, 0).value() == 1.0);
    CHECK_THROWS_AS(sym_power(Vec{1.0, 2.0}, kMaxRank + 1), RankError);
  }

  TEST_CASE("metric tensor examples") {
    const auto q = metric_tensor(2);
    CHECK(comp(q, {0, 0}) == 1.0);
    CHECK(comp(q, {0, 1}) == 0.0);
    CHECK(comp(q, {1, 1}) == 1.0);
    const std::array<Vec, 2> ortho{Vec::unit(2, 0), Vec::unit(2, 1)};
    CHECK(q.evaluate(ortho) == 0.0);
    const std::array<Vec, 2> same{Vec{3.0, 4.0}, Vec{3.0, 4.0}};
    CHECK(q.evaluate(same) == 25.0);
  }

  TEST_CASE("contract examples") {
    const Vec t{0.3, -1.2, 2.0};
    const Vec v{1.5, 0.5, -0.25};
    CHECK(contract(metric_tensor(3), t).to_vec() == t);
    const auto c = contract(sym_power(v, 2), t).to_vec();
    for (std::size_t i = 0; i < 3; ++i) CHECK(c[i] == doctest::Approx(dot(v, t) * v[i]).epsilon(1e-14));
    const auto c3 = contract(sym_power(v, 3), t);
    const auto expect = sym_power(v, 2) * dot(v, t);
    for (std::size_t k = 0; k < c3.size(); ++k) CHECK(c3.coeffs()[k] == doctest::Approx(expect.coeffs()[k]).epsilon(1e-14));
    CHECK_THROWS_AS(contract(metric_tensor(3), Vec{1.0, 2.0}), DimensionError);
    CHECK_THROWS_AS(contract(SymTensor::scalar(1.0, 3), t), RankError);
  }

  TEST_CASE("power evaluation is a product of inner products") {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::uint64_t s = 0; s < 10; ++s) {
        const Vec x = seeded_vec(n, 3 * s);
        const std::array<Vec, 2> a{seeded_vec(n, 3 * s + 1), seeded_vec(n, 3 * s + 2)};
        const double expect = dot(x, a[0]) * dot(x, a[1]);
        CHECK(sym_power(x, 2).evaluate(a) == doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("contraction of a power drops one factor") {
    for (std::size_t n = 2; n <= 5; ++n) {
      for (int r = 0; r < kMaxRank; ++r) {
        const Vec x = seeded_vec(n, 100 + static_cast<std::uint64_t>(r));
        const Vec t = seeded_vec(n, 200 + static_cast<std::uint64_t>(r));
        const auto lhs = contract(sym_power(x, r + 1), t);
        const auto rhs = sym_power(x, r) * dot(x, t);
        for (std::size_t k = 0; k < lhs.size(); ++k) {
          CHECK(std::abs(lhs.coeffs()[k] - rhs.coeffs()[k]) <= 1e-12 * std::max(1.0, std::abs(rhs.coeffs()[k])));
        }
      }
    }
  }

  TEST_CASE("evaluation is symmetric in its arguments") {
    const Vec x = seeded_vec(4, 1), y = seeded_vec(4, 2), z = seeded_vec(4, 3);
    const auto t = sym_product(sym_power(x, 1), sym_product(sym_power(y, 1), sym_power(z, 1)));
    const std::array<Vec, 3> a{seeded_vec(4, 4), seeded_vec(4, 5), seeded_vec(4, 6)};
    const std::array<Vec, 3> b{a[2], a[0], a[1]};
    const std::array<Vec, 3> c{a[1], a[0], a[2]};
    CHECK(t.evaluate(a) == doctest::Approx(t.evaluate(b)).epsilon(1e-13));
    CHECK(t.evaluate(a) == doctest::Approx(t.evaluate(c)).epsilon(1e-13));
  }

  TEST_CASE("symmetric product of vectors") {
    const Vec x{1.0, 2.0}, y{3.0, -1.0};
    const auto p = sym_product(sym_power(x, 1), sym_power(y, 1));
    CHECK(comp(p, {0, 0}) == 3.0);
    CHECK(comp(p, {0, 1}) == doctest::Approx(0.5 * (1.0 * -1.0 + 2.0 * 3.0)));
    CHECK(comp(p, {1, 1}) == -2.0);
    const auto xx = sym_product(sym_power(x, 1), sym_power(x, 1));
    CHECK(xx == sym_power(x, 2));
  }

  TEST_CASE("arithmetic and linear combination") {
    const auto a = sym_power(Vec{1.0, 2.0, 3.0}, 2);
    const auto b = metric_tensor(3);
    const std::array<double, 2> w{2.0, -0.5};
    const std::array<SymTensor, 2> terms{a, b};
    const auto lc = linear_combination(w, terms);
    const auto direct = a * 2.0 - b * 0.5;
    CHECK(lc == direct);
    CHECK_THROWS_AS(a + SymTensor(1, 3), Error);
    CHECK_THROWS_AS(a + metric_tensor(2), Error);
  }

  TEST_CASE("json round trip with one-based indices") {
    const auto t = sym_power(Vec{1.0, -2.0, 0.5}, 2);
    const nlohmann::json j = t;
    CHECK(j.at("rank") == 2);
    CHECK(j.at("dim") == 3);
    CHECK(j.at("coeffs").at(0).at(0) == nlohmann::json::array({1, 1}));
    CHECK(j.get<SymTensor>() == t);
    auto bad = j;
    bad["coeffs"][0][0] = nlohmann::json::array({0, 1});
    CHECK_THROWS(bad.get<SymTensor>());
    auto dup = j;
    dup["coeffs"][1][0] = nlohmann::json::array({1, 1});
    CHECK_THROWS(dup.get<SymTensor>());
  }

  TEST_CASE("vector basics") {
    CHECK_THROWS_AS(Vec({1.0, std::nan("")}), DomainError);
    CHECK_THROWS_AS(Vec(kMaxDim + 1), DimensionError);
    CHECK_THROWS_AS(dot(Vec{1.0, 2.0}, Vec{1.0, 2.0, 3.0}), DimensionError);
    CHECK_THROWS_AS(normalized(Vec(3)), DomainError);
    CHECK(normalized(Vec{3.0, 4.0}) == Vec{0.6, 0.8});
  }
}
