#include "valab/valuations.hpp"

#include <string>

#include "valab/error.hpp"

namespace valab {

namespace {

constexpr double kGrazing = 1e-12;

}  // namespace

std::vector<SurfaceAtom> surface_atoms(const PolytopeBody& p) {
  std::vector<SurfaceAtom> atoms;
  atoms.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    atoms.push_back({f.normal, f.measure, f.offset, f.centroid * f.measure, f.moment2});
  }
  return atoms;
}

Vec q1(const PolytopeBody& p) {
  Vec s(p.dim());
  for (const auto& f : p.facets()) s += f.centroid * f.measure;
  return s / static_cast<double>(p.dim());
}

SymTensor upsilon(const PolytopeBody& p, int r) {
  SymTensor out(r, p.dim());
  for (const auto& f : p.facets()) out += sym_power(f.normal, r) * (f.offset * f.measure);
  return out * (1.0 / static_cast<double>(p.dim()));
}

SymTensor xi(const PolytopeBody& p, int r) {
  SymTensor out(r, p.dim());
  for (const auto& f : p.facets()) out += sym_power(f.normal, r) * f.measure;
  return out * (1.0 / static_cast<double>(p.dim()));
}

SymTensor psi(const PolytopeBody& p, int r) {
  switch (r) {
    case 0: return SymTensor::scalar(p.volume(), p.dim());
    case 1: return SymTensor::from_vec(p.moment());
    case 2: return p.psi2();
    default: throw RankError("psi: only ranks 0..2 are computed");
  }
}

double ConeVolume::total() const noexcept {
  double s = 0.0;
  for (const auto& a : atoms) s += a.mass;
  return s;
}

ConeVolume cone_volume_atoms(const PolytopeBody& p) {
  ConeVolume cv;
  cv.origin_interior = true;
  const double n = static_cast<double>(p.dim());
  const double tol = 1e-12 * std::max(1.0, p.circumradius());
  for (const auto& f : p.facets()) {
    cv.atoms.push_back({f.normal, f.offset * f.measure / n});
    if (!(f.offset > tol)) cv.origin_interior = false;
  }
  return cv;
}

Vec projected_moment(const PolytopeBody& p, const Vec& u) {
  const auto proj = project(p, u);
  return proj.embed(proj.shadow().moment());
}

double projected_volume(const PolytopeBody& p, const Vec& u) { return project(p, u).shadow().volume(); }

int field_rank(PolyField f) noexcept {
  switch (f) {
    case PolyField::One: return 0;
    case PolyField::Identity: return 1;
    case PolyField::Square: return 2;
  }
  return 0;
}

const char* field_name(PolyField f) noexcept {
  switch (f) {
    case PolyField::One: return "1";
    case PolyField::Identity: return "x";
    case PolyField::Square: return "x2";
  }
  return "?";
}

PolyField parse_field(std::string_view name) {
  if (name == "1" || name == "one") return PolyField::One;
  if (name == "x" || name == "identity") return PolyField::Identity;
  if (name == "x2" || name == "square") return PolyField::Square;
  throw DomainError("unsupported field '" + std::string(name) + "' (expected 1, x or x2)");
}

namespace {

SymTensor facet_integral(const FacetData& f, PolyField field, std::size_t n) {
  switch (field) {
    case PolyField::One: return SymTensor::scalar(f.measure, n);
    case PolyField::Identity: return SymTensor::from_vec(f.centroid * f.measure);
    case PolyField::Square: return f.moment2;
  }
  throw DomainError("unsupported field");
}

}  // namespace

SymTensor shadow_functional(const PolytopeBody& p, const Vec& u, PolyField f) {
  if (u.dim() != p.dim()) throw DimensionError("shadow_functional: dimension mismatch");
  require_unit(u, "shadow_functional");
  SymTensor out(field_rank(f), p.dim());
  for (const auto& facet : p.facets()) {
    const double c = dot(facet.normal, u);
    if (c <= kGrazing) continue;
    out += facet_integral(facet, f, p.dim()) * c;
  }
  return out;
}

SymTensor boundary_integral(const PolytopeBody& p, PolyField f) {
  SymTensor out(field_rank(f), p.dim());
  for (const auto& facet : p.facets()) out += facet_integral(facet, f, p.dim());
  return out;
}

}  // namespace valab
