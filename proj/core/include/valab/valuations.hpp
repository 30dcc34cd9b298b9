#pragma once

#include <string_view>
#include <vector>

#include "valab/polytope.hpp"
#include "valab/sym_tensor.hpp"

namespace valab {

/// Atom of the surface area measure at a facet normal, together with the
/// boundary moments of that facet.
struct SurfaceAtom {
  Vec normal;
  double area = 0;
  double support_value = 0;   // h_K(normal)
  Vec boundary_moment;        // int_F x dH^{n-1}
  SymTensor boundary_moment2; // int_F x^2 dH^{n-1}
};

std::vector<SurfaceAtom> surface_atoms(const PolytopeBody& p);

/// (1/n) int_{boundary} x dH^{n-1}.
Vec q1(const PolytopeBody& p);

/// (1/n) int h_K(u) u^r dS_{n-1}(K, u). upsilon(p, 0) is the volume.
SymTensor upsilon(const PolytopeBody& p, int r);

/// (1/n) int u^r dS_{n-1}(K, u). Translation invariant.
SymTensor xi(const PolytopeBody& p, int r);

/// Psi_r = (1/r!) int_K x^r dx for r <= 2.
SymTensor psi(const PolytopeBody& p, int r);

struct ConeVolumeAtom {
  Vec normal;
  double mass = 0;
};

struct ConeVolume {
  std::vector<ConeVolumeAtom> atoms;
  /// True when o is an interior point, so every mass is a genuine cone volume;
  /// otherwise the masses are the signed (1/n) h dS representation.
  bool origin_interior = false;
  double total() const noexcept;
};

ConeVolume cone_volume_atoms(const PolytopeBody& p);

/// z_n(K | u-perp) as a vector of R^n (orthogonal to u).
Vec projected_moment(const PolytopeBody& p, const Vec& u);

/// V_{n-1}(K | u-perp) through the projected hull.
double projected_volume(const PolytopeBody& p, const Vec& u);

enum class PolyField { One, Identity, Square };

int field_rank(PolyField f) noexcept;
const char* field_name(PolyField f) noexcept;
PolyField parse_field(std::string_view name);

/// F_f(K, u): sum over facets with <nu, u> > 1e-12 of <nu, u> int_F f.
SymTensor shadow_functional(const PolytopeBody& p, const Vec& u, PolyField f);

/// int_{boundary} f dH^{n-1}.
SymTensor boundary_integral(const PolytopeBody& p, PolyField f);

}  // namespace valab
