#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "valab/vec.hpp"

#ifndef VALAB_MAX_RANK
#define VALAB_MAX_RANK 4
#endif

namespace valab {

inline constexpr int kMaxRank = VALAB_MAX_RANK;

/// Sorted multi-index i_1 <= ... <= i_r with 0-based entries.
struct MultiIndex {
  std::array<std::uint8_t, kMaxRank> idx{};
  int rank = 0;

  std::uint8_t operator[](int k) const noexcept { return idx[static_cast<std::size_t>(k)]; }
};

/// All sorted multi-indices of the given rank over {0,...,dim-1}, in
/// lexicographic order. This is the storage order of SymTensor.
const std::vector<MultiIndex>& multi_indices(int rank, std::size_t dim);

/// Symmetric r-tensor over R^n. One coefficient per sorted multi-index; the
/// coefficient is the component T(e_{i1},...,e_{ir}).
class SymTensor {
 public:
  SymTensor() = default;
  /// Zero tensor.
  SymTensor(int rank, std::size_t dim);

  static SymTensor scalar(double value, std::size_t dim);
  static SymTensor from_vec(const Vec& v);

  int rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return c_.size(); }

  std::span<const double> coeffs() const noexcept { return c_; }
  std::span<double> coeffs() noexcept { return c_; }

  /// Component lookup; the index need not be sorted.
  double component(std::span<const std::size_t> index) const;
  double& component(std::span<const std::size_t> index);

  double value() const;  // rank 0 only
  Vec to_vec() const;    // rank 1 only

  /// T(a_1,...,a_r).
  double evaluate(std::span<const Vec> args) const;

  double max_abs() const noexcept;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  SymTensor& operator*=(double s) noexcept;

  friend bool operator==(const SymTensor& a, const SymTensor& b) = default;

 private:
  void require_compatible(const SymTensor& o, const char* what) const;

  int rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> c_;
};

inline SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
inline SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
inline SymTensor operator*(SymTensor a, double s) noexcept { return a *= s; }
inline SymTensor operator*(double s, SymTensor a) noexcept { return a *= s; }

/// Storage offset of a sorted multi-index.
std::size_t storage_offset(std::span<const std::uint8_t> sorted, std::size_t dim);

/// x^r.
SymTensor sym_power(const Vec& x, int r);

/// Q with Q(x, y) = <x, y>.
SymTensor metric_tensor(std::size_t n);

/// (a_1,...,a_r) -> T(t, a_1, ..., a_r).
SymTensor contract(const SymTensor& t_tensor, const Vec& t);

/// Symmetric tensor product a.b of rank r+s.
SymTensor sym_product(const SymTensor& a, const SymTensor& b);

/// sum_k w_k T_k; all terms must share rank and dimension.
SymTensor linear_combination(std::span<const double> weights, std::span<const SymTensor> terms);

/// Volume of the k-dimensional unit ball.
double kappa(int k);
/// Surface area of the k-dimensional unit ball, k * kappa(k).
double omega(int k);

void to_json(nlohmann::json& j, const SymTensor& t);
void from_json(const nlohmann::json& j, SymTensor& t);

void to_json(nlohmann::json& j, const Vec& v);
void from_json(const nlohmann::json& j, Vec& v);

}  // namespace valab
