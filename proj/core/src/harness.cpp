#include "valab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "valab/body_io.hpp"
#include "valab/error.hpp"
#include "valab/generators.hpp"
#include "valab/polarization.hpp"

namespace valab {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

VerifyReport make_report(std::string identity, std::string body_spec, const Estimate& est, SymTensor rhs,
                         const SphereSampler& sampler, double tol, Clock::time_point start) {
  VerifyReport r;
  r.identity = std::move(identity);
  r.body_spec = std::move(body_spec);
  r.lhs = est.value;
  r.lhs_std_error = est.std_error;
  r.rhs = std::move(rhs);
  r.tolerance_used = tol;
  r.method = method_name(sampler.method());
  r.seed = sampler.seed();
  r.samples_used = est.samples_used;
  finalize(r);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

void require_sampler(const SphereSampler& sampler, std::size_t n, const char* what) {
  if (sampler.dim() != n || sampler.sphere_dim() != n) {
    throw DimensionError(std::string(what) + ": sampler must cover the full sphere of R^" + std::to_string(n));
  }
}

std::string spec_or(std::string spec, const char* fallback, std::size_t n) {
  if (!spec.empty()) return spec;
  return std::string(fallback) + " n=" + std::to_string(n);
}

}  // namespace

double default_tolerance(const SphereSampler& sampler) noexcept {
  return sampler.method() == SphereMethod::CircleGrid ? kGridTolerance : kMonteCarloTolerance;
}

SphereSampler default_sampler(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
  if (n == 2) return SphereSampler(2, SphereMethod::CircleGrid, kDefaultGridNodes, seed);
  return SphereSampler(n, SphereMethod::MonteCarloAntithetic, samples, seed);
}

VerifyReport check_cauchy(const PolytopeBody& p, const SphereSampler& sampler, std::optional<double> tol,
                          std::string body_spec) {
  const std::size_t n = p.dim();
  require_sampler(sampler, n, "check_cauchy");
  const auto start = Clock::now();
  const double k = kappa(static_cast<int>(n) - 1);
  const auto est =
      integrate(sampler, [&](const Vec& u) { return SymTensor::scalar(projected_volume(p, u) / k, n); });
  return make_report("cauchy", spec_or(std::move(body_spec), "body", n), est, SymTensor::scalar(p.surface_area(), n),
                     sampler, tol.value_or(default_tolerance(sampler)), start);
}

VerifyReport check_theorem(const PolytopeBody& p, const SphereSampler& sampler, std::optional<double> tol,
                           std::string body_spec) {
  const std::size_t n = p.dim();
  require_sampler(sampler, n, "check_theorem");
  const auto start = Clock::now();
  const auto est = integrate(sampler, [&](const Vec& u) { return SymTensor::from_vec(projected_moment(p, u)); });
  const double nd = static_cast<double>(n);
  const Vec rhs = (nd * kappa(static_cast<int>(n) - 1) / (nd + 1.0)) * (nd * q1(p) - upsilon(p, 1).to_vec());
  return make_report("theorem21", spec_or(std::move(body_spec), "body", n), est, SymTensor::from_vec(rhs), sampler,
                     tol.value_or(default_tolerance(sampler)), start);
}

VerifyReport check_corollary(std::span<const PolytopeBody> bodies, const SphereSampler& sampler,
                             std::optional<double> tol, std::string body_spec) {
  if (bodies.empty()) throw DomainError("check_corollary: no bodies");
  const std::size_t n = bodies[0].dim();
  if (bodies.size() != n) {
    throw DomainError("check_corollary: expected " + std::to_string(n) + " bodies, got " +
                      std::to_string(bodies.size()));
  }
  for (const auto& b : bodies) {
    if (b.dim() != n) throw DimensionError("check_corollary: bodies of mixed dimension");
  }
  require_sampler(sampler, n, "check_corollary");
  const auto start = Clock::now();
  const auto est = integrate(sampler, [&](const Vec& u) {
    std::vector<EmbeddedProjection> shadows;
    shadows.reserve(n);
    for (const auto& b : bodies) shadows.push_back(project(b, u));
    return SymTensor::from_vec(mixed_projected_moment(shadows));
  });
  const double nd = static_cast<double>(n);
  const Vec rhs =
      (nd * kappa(static_cast<int>(n) - 1)) * (mixed_moment_with_ball(bodies) - upsilon_mixed(bodies) / (nd + 1.0));
  return make_report("corollary22", spec_or(std::move(body_spec), "bodies", n), est, SymTensor::from_vec(rhs), sampler,
                     tol.value_or(default_tolerance(sampler)), start);
}

VerifyReport check_eq41(const PolytopeBody& p, PolyField f, const SphereSampler& sampler, std::optional<double> tol,
                        std::string body_spec) {
  const std::size_t n = p.dim();
  require_sampler(sampler, n, "check_eq41");
  const auto start = Clock::now();
  const auto est = integrate(sampler, [&](const Vec& u) { return shadow_functional(p, u, f); });
  SymTensor rhs = boundary_integral(p, f);
  rhs *= kappa(static_cast<int>(n) - 1);
  auto r = make_report(std::string("eq41[f=") + field_name(f) + "]", spec_or(std::move(body_spec), "body", n), est,
                       std::move(rhs), sampler, tol.value_or(default_tolerance(sampler)), start);
  return r;
}

VerifyReport check_tv17(const PolytopeBody& p, std::span<const Vec> directions, double tol, std::string body_spec) {
  if (directions.empty()) throw DomainError("check_tv17: no directions");
  const std::size_t n = p.dim();
  const auto start = Clock::now();
  VerifyReport worst;
  double worst_ratio = -1.0;
  bool all_pass = true;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const Vec& u = directions[i];
    if (u.dim() != n) throw DimensionError("check_tv17: direction dimension mismatch");
    require_unit(u, "check_tv17");
    VerifyReport r;
    r.identity = "tv17";
    std::ostringstream spec;
    spec.precision(17);
    spec << spec_or(body_spec, "body", n) << " u[" << i << "]=" << u;
    r.body_spec = spec.str();
    r.lhs = shadow_functional(p, u, PolyField::Identity);
    r.rhs = SymTensor::from_vec(directional_derivative_moment(p, u));
    r.tolerance_used = tol;
    r.abs_floor = tol;
    r.method = "exact";
    r.samples_used = directions.size();
    finalize(r);
    all_pass = all_pass && r.pass;
    const double ratio = r.abs_diff.max_abs() / (tol * r.scale + r.abs_floor);
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = std::move(r);
    }
  }
  worst.pass = all_pass;
  worst.runtime_ms = elapsed_ms(start);
  return worst;
}

double cauchy_pointwise_deviation(const PolytopeBody& p, const Vec& u) {
  const double upper = shadow_functional(p, u, PolyField::One).value();
  const double shadow = projected_volume(p, u);
  return std::abs(upper - shadow) / std::max(std::abs(shadow), 1e-300);
}

const char* identity_name(Identity id) noexcept {
  switch (id) {
    case Identity::Cauchy: return "cauchy";
    case Identity::Theorem: return "theorem21";
    case Identity::Corollary: return "corollary22";
    case Identity::Lemma: return "lemma31";
    case Identity::Eq41: return "eq41";
    case Identity::Tv17: return "tv17";
  }
  return "?";
}

std::vector<Identity> parse_identities(std::string_view name) {
  static constexpr Identity all[] = {Identity::Cauchy, Identity::Theorem, Identity::Corollary,
                                     Identity::Lemma,  Identity::Eq41,    Identity::Tv17};
  if (name == "all") return {std::begin(all), std::end(all)};
  for (Identity id : all) {
    if (name == identity_name(id)) return {id};
  }
  throw DomainError("unknown identity '" + std::string(name) +
                    "' (expected cauchy, theorem21, corollary22, lemma31, eq41, tv17 or all)");
}

SuiteConfig suite_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("suite config: expected a JSON object");
  SuiteConfig c;
  if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<std::size_t>>();
  if (j.contains("bodies")) c.bodies = j.at("bodies").get<std::vector<std::string>>();
  if (j.contains("identities")) {
    c.identities.clear();
    for (const auto& s : j.at("identities")) {
      for (Identity id : parse_identities(s.get<std::string>())) c.identities.push_back(id);
    }
  }
  if (j.contains("fields")) {
    c.fields.clear();
    for (const auto& s : j.at("fields")) c.fields.push_back(parse_field(s.get<std::string>()));
  }
  if (j.contains("samples")) c.samples = j.at("samples").get<std::uint64_t>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("method")) c.method = parse_method(j.at("method").get<std::string>());
  if (j.contains("tol")) c.tol = j.at("tol").get<double>();
  if (j.contains("tv17_directions")) c.tv17_directions = j.at("tv17_directions").get<std::size_t>();
  if (j.contains("workers")) c.workers = j.at("workers").get<unsigned>();
  for (std::size_t n : c.dims) {
    if (n < 2 || n > kMaxDim) throw DimensionError("suite config: dimension " + std::to_string(n) + " out of range");
  }
  if (c.bodies.empty()) throw DomainError("suite config: no bodies");
  return c;
}

std::vector<VerifyReport> run_suite(const SuiteConfig& config) {
  std::vector<VerifyReport> reports;
  auto has = [&](Identity id) {
    return std::find(config.identities.begin(), config.identities.end(), id) != config.identities.end();
  };
  for (std::size_t n : config.dims) {
    SphereSampler sampler = config.method
                                ? SphereSampler(n, *config.method,
                                                *config.method == SphereMethod::CircleGrid && config.samples < 3
                                                    ? kDefaultGridNodes
                                                    : config.samples,
                                                config.seed)
                                : default_sampler(n, config.samples, config.seed);
    sampler.set_workers(config.workers);

    std::vector<PolytopeBody> bodies;
    std::vector<std::string> labels;
    for (const auto& spec : config.bodies) {
      bodies.push_back(parse_body_spec(spec, n));
      labels.push_back(spec + " n=" + std::to_string(n));
    }

    if (has(Identity::Lemma)) {
      for (const Vec& v : {Vec::unit(n, 0), random_unit_vector(n, config.seed, 0)}) {
        reports.push_back(check_absmoment_tensor(v, sampler, config.tol.value_or(default_tolerance(sampler))));
      }
    }
    for (std::size_t b = 0; b < bodies.size(); ++b) {
      const auto& body = bodies[b];
      if (has(Identity::Cauchy)) reports.push_back(check_cauchy(body, sampler, config.tol, labels[b]));
      if (has(Identity::Theorem)) reports.push_back(check_theorem(body, sampler, config.tol, labels[b]));
      if (has(Identity::Corollary)) {
        std::vector<PolytopeBody> group;
        std::string label;
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t idx = (b + k) % std::max(bodies.size(), n);
          if (idx < bodies.size()) {
            group.push_back(bodies[idx]);
            label += (k ? "," : "") + config.bodies[idx];
          } else {
            const std::string pad = "random:" + std::to_string(config.seed + 100 + idx);
            group.push_back(parse_body_spec(pad, n));
            label += (k ? "," : "") + pad;
          }
        }
        reports.push_back(check_corollary(group, sampler, config.tol, label + " n=" + std::to_string(n)));
      }
      if (has(Identity::Eq41)) {
        for (PolyField f : config.fields) reports.push_back(check_eq41(body, f, sampler, config.tol, labels[b]));
      }
      if (has(Identity::Tv17)) {
        std::vector<Vec> dirs;
        for (std::size_t i = 0; i < config.tv17_directions; ++i) dirs.push_back(random_unit_vector(n, config.seed, i));
        reports.push_back(check_tv17(body, dirs, kTv17Tolerance, labels[b]));
      }
    }
  }
  return reports;
}

void print_table(std::ostream& os, std::span<const VerifyReport> reports) {
  const auto flags = os.flags();
  os << std::left << std::setw(16) << "identity" << std::setw(40) << "body" << std::setw(7) << "method"
     << std::setw(12) << "max_rel" << std::setw(10) << "ms"
     << "result\n";
  std::size_t failed = 0;
  for (const auto& r : reports) {
    std::string body = r.body_spec;
    if (body.size() > 38) body = body.substr(0, 35) + "...";
    std::ostringstream rel;
    rel << std::scientific << std::setprecision(2) << r.rel_diff.max_abs();
    os << std::setw(16) << r.identity << std::setw(40) << body << std::setw(7) << r.method << std::setw(12)
       << rel.str() << std::setw(10) << r.runtime_ms << (r.pass ? "PASS" : "FAIL") << '\n';
    if (!r.pass) ++failed;
  }
  os << reports.size() - failed << "/" << reports.size() << " passed\n";
  os.flags(flags);
}

}  // namespace valab
