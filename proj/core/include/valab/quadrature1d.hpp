#pragma once

#include <functional>

namespace valab {

/// Adaptive 1-d integral on [a, b]; tolerates integrable endpoint
/// singularities.
double integrate_1d(const std::function<double(double)>& f, double a, double b);

/// 2 int_0^1 tau^3 (1 - tau^2)^{(n-3)/2} dtau by quadrature.
double beta_moment(int n);
/// Closed form 4 / (n^2 - 1).
double beta_moment_closed(int n);

/// int_{-1}^{1} |tau| (1 - tau^2)^{(n-1)/2} dtau by quadrature; equals 2/(n+1).
double abs_tau_moment(int n);

}  // namespace valab
