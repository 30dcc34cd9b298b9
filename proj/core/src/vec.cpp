#include "valab/vec.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "valab/error.hpp"

namespace valab {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw DimensionError("dimension " + std::to_string(dim) + " outside 1.." +
                         std::to_string(kMaxDim));
  }
}

}  // namespace

Vec::Vec(std::size_t dim) : dim_(dim) { check_dim(dim); }

Vec::Vec(std::initializer_list<double> coords)
    : Vec(std::span<const double>(coords.begin(), coords.size())) {}

Vec::Vec(std::span<const double> coords) : dim_(coords.size()) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), c_.begin());
  if (!all_finite()) throw DomainError("vector with non-finite entries");
}

Vec Vec::unit(std::size_t dim, std::size_t axis) {
  Vec v(dim);
  if (axis >= dim) throw DimensionError("unit vector axis out of range");
  v[axis] = 1.0;
  return v;
}

double Vec::norm_inf() const noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) m = std::max(m, std::abs(c_[i]));
  return m;
}

bool Vec::all_finite() const noexcept {
  return std::all_of(begin(), end(), [](double x) { return std::isfinite(x); });
}

Vec normalized(const Vec& a) {
  const double n = a.norm();
  if (!(n > 0.0)) throw DomainError("cannot normalize the zero vector");
  return a / n;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

namespace detail {

void dimension_mismatch(std::size_t a, std::size_t b, const char* what) {
  throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                       std::to_string(b) + ")");
}

}  // namespace detail

}  // namespace valab
