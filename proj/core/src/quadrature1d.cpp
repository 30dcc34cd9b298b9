#include "valab/quadrature1d.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "valab/error.hpp"

namespace valab {

double integrate_1d(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b);
}

double beta_moment(int n) {
  if (n < 2) throw DomainError("beta_moment: n >= 2 required");
  // tau = sin t: 2 int_0^{pi/2} sin^3 t cos^{n-2} t dt.
  return 2.0 * integrate_1d([n](double t) { return std::pow(std::sin(t), 3) * std::pow(std::cos(t), n - 2); }, 0.0,
                            std::numbers::pi / 2);
}

double beta_moment_closed(int n) {
  if (n < 2) throw DomainError("beta_moment_closed: n >= 2 required");
  return 4.0 / (static_cast<double>(n) * n - 1.0);
}

double abs_tau_moment(int n) {
  if (n < 2) throw DomainError("abs_tau_moment: n >= 2 required");
  const double e = (n - 1) / 2.0;
  return 2.0 * integrate_1d([e](double t) { return t * std::pow(1.0 - t * t, e); }, 0.0, 1.0);
}

}  // namespace valab
