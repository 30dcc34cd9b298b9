#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "valab/polytope.hpp"
#include "valab/sym_tensor.hpp"

namespace valab {

enum class BaseFunctional {
  Q1,          // q_1, degree n
  Upsilon1,    // Upsilon_1, degree n
  MomentZ,     // z_{n+1}, degree n+1
  ShadowArea,  // V_{n-1}(K | u-perp) for a fixed u, degree n-1
};

const char* functional_name(BaseFunctional f) noexcept;
BaseFunctional parse_functional(std::string_view name);

/// Homogeneity degree of f on bodies of dimension n.
int natural_degree(BaseFunctional f, std::size_t n);

/// Largest body count accepted by polarize (2^m - 1 Minkowski sums).
inline constexpr std::size_t kMaxPolarizationBodies = 6;

struct PolarizationRequest {
  std::vector<PolytopeBody> bodies;
  BaseFunctional functional = BaseFunctional::Q1;
  int degree = 0;
  std::optional<Vec> direction;  // ShadowArea only
};

/// Fully mixed coefficient
///   (1/m!) sum_{S nonempty} (-1)^{m-|S|} Phi(sum_{i in S} K_i).
SymTensor polarize(const PolarizationRequest& req);
SymTensor polarize(std::span<const PolytopeBody> bodies, BaseFunctional f, int degree,
                   const std::optional<Vec>& direction = std::nullopt);

/// Direct evaluation of the base functional on one body.
SymTensor evaluate_functional(const PolytopeBody& body, BaseFunctional f, const std::optional<Vec>& direction = std::nullopt);

/// z(K_1, ..., K_n, B^n) = (n/(n+1)) * polarized q_1.
Vec mixed_moment_with_ball(std::span<const PolytopeBody> bodies);

/// Upsilon^{(1)}(K_1, ..., K_n) as the polarization of Upsilon_1.
Vec upsilon_mixed(std::span<const PolytopeBody> bodies);

/// z_n(K_1|u-perp, ..., K_n|u-perp) embedded in R^n. All projections must
/// share the same direction.
Vec mixed_projected_moment(std::span<const EmbeddedProjection> shadows);

/// Linear coefficient of eps -> z_{n+1}(K + eps [o, u]), obtained from an
/// exact polynomial fit. Equals (n+1) z(K, ..., K, [o, u]).
Vec directional_derivative_moment(const PolytopeBody& p, const Vec& u);

}  // namespace valab
