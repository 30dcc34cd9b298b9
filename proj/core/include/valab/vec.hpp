#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>

#ifndef VALAB_MAX_DIM
#define VALAB_MAX_DIM 5
#endif

namespace valab {

inline constexpr std::size_t kMaxDim = VALAB_MAX_DIM;

/// Point or direction in R^n, 1 <= n <= kMaxDim. Fixed inline storage, no
/// heap allocation.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim);
  Vec(std::initializer_list<double> coords);
  explicit Vec(std::span<const double> coords);

  static Vec unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const noexcept { return dim_; }
  double operator[](std::size_t i) const noexcept { return c_[i]; }
  double& operator[](std::size_t i) noexcept { return c_[i]; }

  std::span<const double> coords() const noexcept { return {c_.data(), dim_}; }
  std::span<double> coords() noexcept { return {c_.data(), dim_}; }

  const double* begin() const noexcept { return c_.data(); }
  const double* end() const noexcept { return c_.data() + dim_; }

  double norm() const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += c_[i] * c_[i];
    return std::sqrt(s);
  }
  double norm_inf() const noexcept;
  bool all_finite() const noexcept;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(double s) noexcept {
    for (std::size_t i = 0; i < dim_; ++i) c_[i] *= s;
    return *this;
  }
  Vec& operator/=(double s) noexcept {
    for (std::size_t i = 0; i < dim_; ++i) c_[i] /= s;
    return *this;
  }

  friend bool operator==(const Vec& a, const Vec& b) noexcept {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i) {
      if (a.c_[i] != b.c_[i]) return false;
    }
    return true;
  }

 private:
  std::array<double, kMaxDim> c_{};
  std::size_t dim_ = 0;
};

namespace detail {
[[noreturn]] void dimension_mismatch(std::size_t a, std::size_t b, const char* what);
}  // namespace detail

/// Throws DimensionError unless a and b have equal dimension.
inline void require_same_dim(const Vec& a, const Vec& b, const char* what) {
  if (a.dim() != b.dim()) detail::dimension_mismatch(a.dim(), b.dim(), what);
}

inline Vec& Vec::operator+=(const Vec& o) {
  require_same_dim(*this, o, "vector addition");
  for (std::size_t i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

inline Vec& Vec::operator-=(const Vec& o) {
  require_same_dim(*this, o, "vector subtraction");
  for (std::size_t i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

inline Vec operator+(Vec a, const Vec& b) { return a += b; }
inline Vec operator-(Vec a, const Vec& b) { return a -= b; }
inline Vec operator*(Vec a, double s) noexcept { return a *= s; }
inline Vec operator*(double s, Vec a) noexcept { return a *= s; }
inline Vec operator/(Vec a, double s) noexcept { return a /= s; }
inline Vec operator-(Vec a) noexcept { return a *= -1.0; }

inline double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "dot product");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double distance(const Vec& a, const Vec& b) { return (a - b).norm(); }

/// Returns a / |a|. Throws DomainError for the zero vector.
Vec normalized(const Vec& a);

std::ostream& operator<<(std::ostream& os, const Vec& v);

}  // namespace valab
