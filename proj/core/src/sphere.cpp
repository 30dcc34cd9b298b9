#include "valab/sphere.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>

#include "valab/error.hpp"
#include "valab/philox.hpp"
#include "valab/polytope.hpp"

namespace valab {

namespace {

constexpr std::uint32_t kSphereStream = 0x53504852;  // "SPHR"
constexpr std::uint64_t kChunkUnits = 1024;

// Running mean / sum of squared deviations for one chunk of units.
struct ChunkStats {
  double count = 0;
  std::vector<double> mean;
  std::vector<double> m2;

  void add(std::span<const double> x) {
    if (mean.empty()) {
      mean.assign(x.size(), 0.0);
      m2.assign(x.size(), 0.0);
    }
    count += 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - mean[i];
      mean[i] += d / count;
      m2[i] += d * (x[i] - mean[i]);
    }
  }

  // Chan et al. pairwise combination.
  void merge(const ChunkStats& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = count + o.count;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double d = o.mean[i] - mean[i];
      mean[i] += d * (o.count / total);
      m2[i] += o.m2[i] + d * d * (count * o.count / total);
    }
    count = total;
  }
};

std::string describe(const Vec& u) {
  std::ostringstream os;
  os.precision(17);
  os << u;
  return os.str();
}

}  // namespace

const char* method_name(SphereMethod m) noexcept {
  return m == SphereMethod::CircleGrid ? "grid" : "mc";
}

SphereMethod parse_method(std::string_view name) {
  if (name == "mc" || name == "monte_carlo_antithetic") return SphereMethod::MonteCarloAntithetic;
  if (name == "grid" || name == "circle_grid") return SphereMethod::CircleGrid;
  throw DomainError("unknown quadrature method '" + std::string(name) + "' (expected mc or grid)");
}

SphereSampler::SphereSampler(std::size_t dim, SphereMethod method, std::uint64_t count, std::uint64_t seed)
    : dim_(dim), sphere_dim_(dim), method_(method), count_(count), seed_(seed) {
  if (dim < 2 || dim > kMaxDim) throw DimensionError("sphere sampler: dimension outside 2.." + std::to_string(kMaxDim));
  if (method == SphereMethod::MonteCarloAntithetic && (count < 4 || count % 2 != 0)) {
    throw DomainError("sphere sampler: Monte Carlo count must be even and >= 4");
  }
  if (method == SphereMethod::CircleGrid) {
    if (dim != 2) throw DomainError("sphere sampler: circle grid needs a 2-d sphere");
    if (count < 3) throw DomainError("sphere sampler: grid needs at least 3 nodes");
  }
}

SphereSampler SphereSampler::subsphere(const Vec& v, SphereMethod method, std::uint64_t count, std::uint64_t seed) {
  require_unit(v, "subsphere_sampler");
  if (v.dim() < 3) throw DimensionError("subsphere_sampler: n >= 3 required (n = 2 gives two points)");
  SphereSampler s(v.dim() - 1, method, count, seed);
  s.dim_ = v.dim();
  s.embedding_ = complement_basis(v);
  return s;
}

double SphereSampler::total_mass() const { return omega(static_cast<int>(sphere_dim_)); }

std::uint64_t SphereSampler::units() const noexcept {
  return method_ == SphereMethod::MonteCarloAntithetic ? count_ / 2 : count_;
}

Vec SphereSampler::intrinsic(std::uint64_t unit) const {
  if (method_ == SphereMethod::CircleGrid) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(unit) / static_cast<double>(count_);
    return Vec{std::cos(t), std::sin(t)};
  }
  return CounterRng(seed_, kSphereStream).unit_vector(unit, sphere_dim_);
}

Vec SphereSampler::embed(const Vec& y) const {
  if (embedding_.empty()) return y;
  Vec x(dim_);
  for (std::size_t k = 0; k < embedding_.size(); ++k) x += y[k] * embedding_[k];
  return x;
}

Vec SphereSampler::direction(std::uint64_t i) const {
  if (i >= count_) throw DomainError("sphere sampler: direction index out of range");
  if (method_ == SphereMethod::CircleGrid) return embed(intrinsic(i));
  const Vec u = embed(intrinsic(i / 2));
  return (i % 2 == 0) ? u : -u;
}

Estimate integrate(const SphereSampler& sampler, const Integrand& integrand) {
  const bool mc = sampler.method() == SphereMethod::MonteCarloAntithetic;
  const std::uint64_t units = sampler.units();
  const std::uint64_t chunks = (units + kChunkUnits - 1) / kChunkUnits;

  std::vector<ChunkStats> stats(chunks);
  int rank = -1;
  std::size_t tdim = 0;
  std::once_flag shape_once;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto check = [&](const SymTensor& t, const Vec& u) {
    std::call_once(shape_once, [&] {
      rank = t.rank();
      tdim = t.dim();
    });
    if (t.rank() != rank || t.dim() != tdim) throw Error("integrand changed shape between samples");
    for (double x : t.coeffs()) {
      if (!std::isfinite(x)) throw DomainError("integrand is not finite at direction " + describe(u));
    }
  };

  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) return;
        ChunkStats& s = stats[c];
        const std::uint64_t end = std::min(units, (c + 1) * kChunkUnits);
        std::vector<double> g;
        for (std::uint64_t k = c * kChunkUnits; k < end; ++k) {
          if (mc) {
            const Vec u = sampler.direction(2 * k);
            const Vec w = sampler.direction(2 * k + 1);
            SymTensor a = integrand(u);
            check(a, u);
            const SymTensor b = integrand(w);
            check(b, w);
            a += b;
            a *= 0.5;
            s.add(a.coeffs());
          } else {
            const Vec u = sampler.direction(k);
            const SymTensor a = integrand(u);
            check(a, u);
            s.add(a.coeffs());
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
  };

  const unsigned nworkers = static_cast<unsigned>(std::min<std::uint64_t>(sampler.workers(), chunks));
  if (nworkers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ChunkStats total;
  for (const auto& s : stats) total.merge(s);

  const double mass = sampler.total_mass();
  Estimate est;
  est.value = SymTensor(rank, tdim);
  est.std_error = SymTensor(rank, tdim);
  est.samples_used = sampler.count();
  for (std::size_t i = 0; i < est.value.size(); ++i) {
    est.value.coeffs()[i] = mass * total.mean[i];
    if (mc && total.count > 1) {
      const double var = total.m2[i] / (total.count - 1);
      est.std_error.coeffs()[i] = mass * std::sqrt(std::max(0.0, var) / total.count);
    }
  }
  return est;
}

SymTensor absmoment_tensor_exact(const Vec& v) {
  const std::size_t n = v.dim();
  const double c = 2.0 * kappa(static_cast<int>(n) - 1) / (static_cast<double>(n) + 1.0);
  return (sym_power(v, 2) + metric_tensor(n)) * c;
}

VerifyReport check_absmoment_tensor(const Vec& v, const SphereSampler& sampler, double tol) {
  if (sampler.dim() != v.dim() || sampler.sphere_dim() != v.dim()) {
    throw DimensionError("check_absmoment_tensor: sampler must cover the full sphere of R^n");
  }
  require_unit(v, "check_absmoment_tensor");
  const auto start = std::chrono::steady_clock::now();
  const auto est = integrate(sampler, [&v](const Vec& u) { return sym_power(u, 2) * std::abs(dot(v, u)); });
  VerifyReport r;
  r.identity = "lemma31";
  std::ostringstream spec;
  spec.precision(17);
  spec << "n=" << v.dim() << " v=" << v;
  r.body_spec = spec.str();
  r.lhs = est.value;
  r.lhs_std_error = est.std_error;
  r.rhs = absmoment_tensor_exact(v);
  r.tolerance_used = tol;
  r.method = method_name(sampler.method());
  r.seed = sampler.seed();
  r.samples_used = est.samples_used;
  finalize(r);
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace valab
