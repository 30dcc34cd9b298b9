#include "valab/polarization.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "valab/error.hpp"
#include "valab/valuations.hpp"

namespace valab {

const char* functional_name(BaseFunctional f) noexcept {
  switch (f) {
    case BaseFunctional::Q1: return "q1";
    case BaseFunctional::Upsilon1: return "upsilon1";
    case BaseFunctional::MomentZ: return "moment_z";
    case BaseFunctional::ShadowArea: return "shadow_area";
  }
  return "?";
}

BaseFunctional parse_functional(std::string_view name) {
  if (name == "q1") return BaseFunctional::Q1;
  if (name == "upsilon1") return BaseFunctional::Upsilon1;
  if (name == "moment_z" || name == "z") return BaseFunctional::MomentZ;
  if (name == "shadow_area") return BaseFunctional::ShadowArea;
  throw DomainError("unknown base functional '" + std::string(name) + "'");
}

int natural_degree(BaseFunctional f, std::size_t n) {
  const int d = static_cast<int>(n);
  switch (f) {
    case BaseFunctional::Q1:
    case BaseFunctional::Upsilon1: return d;
    case BaseFunctional::MomentZ: return d + 1;
    case BaseFunctional::ShadowArea: return d - 1;
  }
  return 0;
}

SymTensor evaluate_functional(const PolytopeBody& body, BaseFunctional f, const std::optional<Vec>& direction) {
  switch (f) {
    case BaseFunctional::Q1: return SymTensor::from_vec(q1(body));
    case BaseFunctional::Upsilon1: return upsilon(body, 1);
    case BaseFunctional::MomentZ: return SymTensor::from_vec(body.moment());
    case BaseFunctional::ShadowArea:
      if (!direction) throw DomainError("shadow_area needs a direction");
      return SymTensor::scalar(projected_volume(body, *direction), body.dim());
  }
  throw DomainError("unknown base functional");
}

namespace {

// Subset Minkowski sums, memoised along the lowest set bit.
std::vector<PolytopeBody> subset_sums(std::span<const PolytopeBody> bodies) {
  const std::size_t m = bodies.size();
  std::vector<PolytopeBody> sums;
  sums.reserve(std::size_t{1} << m);
  sums.push_back(bodies[0]);  // placeholder for the empty set, never evaluated
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    sums.push_back(rest == 0 ? bodies[low] : minkowski_sum(sums[rest], bodies[low]));
  }
  return sums;
}

}  // namespace

SymTensor polarize(std::span<const PolytopeBody> bodies, BaseFunctional f, int degree,
                   const std::optional<Vec>& direction) {
  if (bodies.empty()) throw DomainError("polarize: no bodies");
  if (bodies.size() > kMaxPolarizationBodies) {
    throw DomainError("polarize: at most " + std::to_string(kMaxPolarizationBodies) + " bodies");
  }
  const std::size_t n = bodies[0].dim();
  for (const auto& b : bodies) {
    if (b.dim() != n) throw DimensionError("polarize: bodies of different dimension");
  }
  const int expected = natural_degree(f, n);
  if (degree != expected) {
    throw DomainError(std::string("polarize: ") + functional_name(f) + " has degree " + std::to_string(expected) +
                      " in dimension " + std::to_string(n) + ", request says " + std::to_string(degree));
  }
  if (static_cast<int>(bodies.size()) != degree) {
    throw DomainError("polarize: body count " + std::to_string(bodies.size()) + " differs from degree " +
                      std::to_string(degree));
  }
  if (f == BaseFunctional::ShadowArea && (!direction || direction->dim() != n)) {
    throw DomainError("polarize: shadow_area needs a direction in R^n");
  }

  const std::size_t m = bodies.size();
  const auto sums = subset_sums(bodies);
  SymTensor acc;
  double factorial = 1.0;
  for (std::size_t k = 2; k <= m; ++k) factorial *= static_cast<double>(k);
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    const auto sign = ((m - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0) ? 1.0 : -1.0;
    SymTensor term = evaluate_functional(sums[mask], f, direction) * sign;
    if (mask == 1) acc = std::move(term);
    else acc += term;
  }
  return acc * (1.0 / factorial);
}

SymTensor polarize(const PolarizationRequest& req) {
  return polarize(req.bodies, req.functional, req.degree, req.direction);
}

Vec mixed_moment_with_ball(std::span<const PolytopeBody> bodies) {
  if (bodies.empty()) throw DomainError("mixed_moment_with_ball: no bodies");
  const auto n = static_cast<double>(bodies[0].dim());
  const auto q = polarize(bodies, BaseFunctional::Q1, static_cast<int>(bodies.size()));
  return q.to_vec() * (n / (n + 1.0));
}

Vec upsilon_mixed(std::span<const PolytopeBody> bodies) {
  return polarize(bodies, BaseFunctional::Upsilon1, static_cast<int>(bodies.size())).to_vec();
}

Vec mixed_projected_moment(std::span<const EmbeddedProjection> shadows) {
  if (shadows.empty()) throw DomainError("mixed_projected_moment: no shadows");
  const Vec& u = shadows[0].direction();
  for (const auto& s : shadows) {
    if (!(s.direction() == u)) throw DomainError("mixed_projected_moment: shadows from different directions");
  }
  std::vector<PolytopeBody> bodies;
  bodies.reserve(shadows.size());
  for (const auto& s : shadows) bodies.push_back(s.shadow());
  const auto z = polarize(bodies, BaseFunctional::MomentZ, static_cast<int>(bodies.size()));
  return shadows[0].embed(z.to_vec());
}

namespace {

// Least squares for a small dense system via Householder QR in long double.
// a is rows x cols, row-major; returns the solution and the max residual.
std::vector<long double> least_squares(std::vector<long double> a, std::vector<long double> b, std::size_t rows,
                                       std::size_t cols) {
  for (std::size_t c = 0; c < cols; ++c) {
    long double norm = 0;
    for (std::size_t r = c; r < rows; ++r) norm += a[r * cols + c] * a[r * cols + c];
    norm = std::sqrt(norm);
    if (norm == 0) throw GeometryError("polynomial fit: rank-deficient node matrix");
    const long double alpha = a[c * cols + c] > 0 ? -norm : norm;
    std::vector<long double> v(rows, 0);
    for (std::size_t r = c; r < rows; ++r) v[r] = a[r * cols + c];
    v[c] -= alpha;
    long double vv = 0;
    for (std::size_t r = c; r < rows; ++r) vv += v[r] * v[r];
    for (std::size_t k = c; k < cols; ++k) {
      long double s = 0;
      for (std::size_t r = c; r < rows; ++r) s += v[r] * a[r * cols + k];
      s = 2 * s / vv;
      for (std::size_t r = c; r < rows; ++r) a[r * cols + k] -= s * v[r];
    }
    long double s = 0;
    for (std::size_t r = c; r < rows; ++r) s += v[r] * b[r];
    s = 2 * s / vv;
    for (std::size_t r = c; r < rows; ++r) b[r] -= s * v[r];
  }
  std::vector<long double> x(cols, 0);
  for (std::size_t c = cols; c-- > 0;) {
    long double s = b[c];
    for (std::size_t k = c + 1; k < cols; ++k) s -= a[c * cols + k] * x[k];
    x[c] = s / a[c * cols + c];
  }
  return x;
}

}  // namespace

Vec directional_derivative_moment(const PolytopeBody& p, const Vec& u) {
  if (u.dim() != p.dim()) throw DimensionError("directional_derivative_moment: dimension mismatch");
  require_unit(u, "directional_derivative_moment");
  const std::size_t n = p.dim();
  const std::size_t degree = n + 1;
  const std::size_t nodes = n + 3;  // one more than the coefficient count
  const double radius = p.circumradius();

  std::vector<double> t(nodes);
  std::vector<Vec> values;
  double scale = std::pow(radius, static_cast<double>(n + 1));
  for (std::size_t k = 0; k < nodes; ++k) {
    t[k] = static_cast<double>(k) / 8.0;
    values.push_back(k == 0 ? p.moment() : sweep(p, u * (t[k] * radius)).moment());
    scale = std::max(scale, values.back().norm_inf());
  }

  std::vector<long double> vander(nodes * (degree + 1));
  for (std::size_t k = 0; k < nodes; ++k) {
    long double pw = 1;
    for (std::size_t j = 0; j <= degree; ++j) {
      vander[k * (degree + 1) + j] = pw;
      pw *= t[k];
    }
  }
  Vec slope(n);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long double> rhs(nodes);
    for (std::size_t k = 0; k < nodes; ++k) rhs[k] = values[k][i];
    const auto coef = least_squares(vander, rhs, nodes, degree + 1);
    for (std::size_t k = 0; k < nodes; ++k) {
      long double fit = 0;
      for (std::size_t j = 0; j <= degree; ++j) fit += coef[j] * vander[k * (degree + 1) + j];
      residual = std::max(residual, static_cast<double>(std::abs(fit - rhs[k])));
    }
    slope[i] = static_cast<double>(coef[1]) / radius;
  }
  if (residual > 1e-8 * scale) {
    throw GeometryError("directional derivative fit residual " + std::to_string(residual) + " exceeds 1e-8 * scale");
  }
  return slope;
}

}  // namespace valab
