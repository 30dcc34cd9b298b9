#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "valab/report.hpp"
#include "valab/sym_tensor.hpp"
#include "valab/vec.hpp"

namespace valab {

enum class SphereMethod {
  MonteCarloAntithetic,  // seeded uniform directions, emitted as +-u pairs
  CircleGrid,            // uniform angles on a circle (2-d spheres only)
};

const char* method_name(SphereMethod m) noexcept;
SphereMethod parse_method(std::string_view name);

/// Deterministic direction source on S^{k-1}, either the full sphere of R^n
/// (k = n) or a great subsphere embedded in R^n.
///
/// Monte Carlo direction 2j is the normalized Gaussian vector drawn from the
/// counter-based generator at index j; direction 2j+1 is its negative. The
/// sequence depends only on (seed, count, method).
class SphereSampler {
 public:
  SphereSampler(std::size_t dim, SphereMethod method, std::uint64_t count, std::uint64_t seed);

  /// Sampler over S^{n-1} intersected with v-perp, n >= 3.
  static SphereSampler subsphere(const Vec& v, SphereMethod method, std::uint64_t count, std::uint64_t seed);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t sphere_dim() const noexcept { return sphere_dim_; }
  SphereMethod method() const noexcept { return method_; }
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// omega_k, the (k-1)-measure of the sampled sphere.
  double total_mass() const;

  /// Independent draws: antithetic pairs for Monte Carlo, nodes for the grid.
  std::uint64_t units() const noexcept;

  Vec direction(std::uint64_t i) const;

  /// Worker threads used by integrate(); results do not depend on it.
  void set_workers(unsigned workers) noexcept { workers_ = workers == 0 ? 1 : workers; }
  unsigned workers() const noexcept { return workers_; }

 private:
  Vec intrinsic(std::uint64_t unit) const;
  Vec embed(const Vec& y) const;

  std::size_t dim_;
  std::size_t sphere_dim_;
  SphereMethod method_;
  std::uint64_t count_;
  std::uint64_t seed_;
  std::vector<Vec> embedding_;  // empty for the full sphere
  unsigned workers_ = 1;
};

struct Estimate {
  SymTensor value;
  SymTensor std_error;  // zero for the grid method
  std::uint64_t samples_used = 0;
};

using Integrand = std::function<SymTensor(const Vec&)>;

/// Integral of the integrand over the sampler's sphere w.r.t. spherical
/// Lebesgue measure. Monte Carlo: total mass times the mean of the pair
/// averages, with the standard error of that mean. Grid: trapezoidal rule
/// (error O(count^-2) for piecewise smooth integrands), std_error 0.
/// A non-finite integrand value throws, naming the direction.
Estimate integrate(const SphereSampler& sampler, const Integrand& integrand);

/// (2 kappa_{n-1} / (n+1)) (v^2 + Q).
SymTensor absmoment_tensor_exact(const Vec& v);

/// Monte Carlo / grid estimate of int |<v,u>| u^2 du against the closed form.
VerifyReport check_absmoment_tensor(const Vec& v, const SphereSampler& sampler, double tol = 0.0);

}  // namespace valab
