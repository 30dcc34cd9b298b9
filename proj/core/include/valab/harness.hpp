#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "valab/polytope.hpp"
#include "valab/report.hpp"
#include "valab/sphere.hpp"
#include "valab/valuations.hpp"

namespace valab {

inline constexpr double kMonteCarloTolerance = 1e-3;
inline constexpr double kGridTolerance = 1e-5;
inline constexpr double kTv17Tolerance = 1e-8;
inline constexpr std::uint64_t kDefaultGridNodes = 200000;

/// 1e-5 for the circle grid, 1e-3 for Monte Carlo.
double default_tolerance(const SphereSampler& sampler) noexcept;

/// Circle grid with 2e5 nodes for n = 2, Monte Carlo with `samples` otherwise.
SphereSampler default_sampler(std::size_t n, std::uint64_t samples, std::uint64_t seed);

/// Surface area against (1/kappa_{n-1}) int V_{n-1}(K|u-perp) du.
VerifyReport check_cauchy(const PolytopeBody& p, const SphereSampler& sampler, std::optional<double> tol = std::nullopt,
                          std::string body_spec = {});

/// int z_n(K|u-perp) du against (n kappa_{n-1}/(n+1)) (n q_1 - Upsilon_1).
VerifyReport check_theorem(const PolytopeBody& p, const SphereSampler& sampler, std::optional<double> tol = std::nullopt,
                           std::string body_spec = {});

/// Mixed version over n bodies:
/// int z_n(K_1|u-perp, ..., K_n|u-perp) du against
/// n kappa_{n-1} (z(K_1, ..., K_n, B^n) - Upsilon^{(1)}(K_1, ..., K_n)/(n+1)).
VerifyReport check_corollary(std::span<const PolytopeBody> bodies, const SphereSampler& sampler,
                             std::optional<double> tol = std::nullopt, std::string body_spec = {});

/// int F_f(K, u) du against kappa_{n-1} int_{boundary} f.
VerifyReport check_eq41(const PolytopeBody& p, PolyField f, const SphereSampler& sampler,
                        std::optional<double> tol = std::nullopt, std::string body_spec = {});

/// shadow_functional(P, u, x) against directional_derivative_moment(P, u) for
/// every direction. The report carries the direction with the largest
/// deviation; pass requires every direction within tol (relative) + tol.
VerifyReport check_tv17(const PolytopeBody& p, std::span<const Vec> directions, double tol = kTv17Tolerance,
                        std::string body_spec = {});

/// Pointwise: sum over upper facets of a_F <nu_F, u> against V_{n-1}(K|u-perp).
/// Returns the relative deviation.
double cauchy_pointwise_deviation(const PolytopeBody& p, const Vec& u);

enum class Identity { Cauchy, Theorem, Corollary, Lemma, Eq41, Tv17 };

const char* identity_name(Identity id) noexcept;
/// Accepts cauchy, theorem21, corollary22, lemma31, eq41, tv17; "all" expands.
std::vector<Identity> parse_identities(std::string_view name);

struct SuiteConfig {
  std::vector<std::size_t> dims{2, 3};
  std::vector<std::string> bodies{"cube", "simplex", "cross_polytope", "random:1", "random:2", "random:3"};
  std::vector<Identity> identities{Identity::Cauchy, Identity::Theorem, Identity::Corollary,
                                   Identity::Lemma,  Identity::Eq41,    Identity::Tv17};
  std::vector<PolyField> fields{PolyField::One, PolyField::Identity, PolyField::Square};
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::optional<SphereMethod> method;  // default: grid for n = 2, mc otherwise
  std::optional<double> tol;
  std::size_t tv17_directions = 20;
  unsigned workers = 1;
};

/// corollary22 groups body b with the next n-1 suite bodies (cyclically),
/// padding with seeded random bodies when the suite has fewer than n.
/// Keys: dims, bodies, identities, fields, samples, seed, method, tol,
/// tv17_directions, workers. Missing keys keep their defaults.
SuiteConfig suite_config_from_json(const nlohmann::json& j);

std::vector<VerifyReport> run_suite(const SuiteConfig& config);

/// One row per report: identity, body, method, max rel diff, pass.
void print_table(std::ostream& os, std::span<const VerifyReport> reports);

}  // namespace valab
