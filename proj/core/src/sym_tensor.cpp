#include "valab/sym_tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include <nlohmann/json.hpp>

#include "valab/error.hpp"

namespace valab {

namespace {

void check_rank(int rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw RankError("tensor rank " + std::to_string(rank) + " outside 0.." +
                    std::to_string(kMaxRank));
  }
}

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw DimensionError("tensor dimension " + std::to_string(dim) + " outside 1.." +
                         std::to_string(kMaxDim));
  }
}

// Number of sorted r-tuples over n symbols, C(n + r - 1, r).
std::size_t multiset_count(std::size_t n, int r) {
  if (r == 0) return 1;
  if (n == 0) return 0;
  std::size_t num = 1, den = 1;
  for (int k = 1; k <= r; ++k) {
    num *= n + static_cast<std::size_t>(k) - 1;
    den *= static_cast<std::size_t>(k);
  }
  return num / den;
}

void enumerate(int rank, std::size_t dim, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == rank) {
    out.push_back(cur);
    return;
  }
  const std::size_t start = pos == 0 ? 0 : cur[pos - 1];
  for (std::size_t v = start; v < dim; ++v) {
    cur.idx[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(v);
    enumerate(rank, dim, pos + 1, cur, out);
  }
}

struct IndexTable {
  std::array<std::array<std::vector<MultiIndex>, kMaxDim + 1>, kMaxRank + 1> table;
  IndexTable() {
    for (int r = 0; r <= kMaxRank; ++r) {
      for (std::size_t n = 1; n <= kMaxDim; ++n) {
        MultiIndex cur;
        cur.rank = r;
        auto& out = table[static_cast<std::size_t>(r)][n];
        out.reserve(multiset_count(n, r));
        enumerate(r, n, 0, cur, out);
      }
    }
  }
};

std::size_t sorted_offset(std::span<const std::size_t> index, std::size_t dim) {
  std::array<std::uint8_t, kMaxRank> s{};
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= dim) throw DimensionError("tensor index out of range");
    s[k] = static_cast<std::uint8_t>(index[k]);
  }
  std::sort(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(index.size()));
  return storage_offset({s.data(), index.size()}, dim);
}

}  // namespace

const std::vector<MultiIndex>& multi_indices(int rank, std::size_t dim) {
  static const IndexTable tables;
  check_rank(rank);
  check_dim(dim);
  return tables.table[static_cast<std::size_t>(rank)][dim];
}

std::size_t storage_offset(std::span<const std::uint8_t> sorted, std::size_t dim) {
  const int r = static_cast<int>(sorted.size());
  std::size_t offset = 0;
  std::size_t prev = 0;
  for (int k = 0; k < r; ++k) {
    const std::size_t cur = sorted[static_cast<std::size_t>(k)];
    for (std::size_t v = prev; v < cur; ++v) offset += multiset_count(dim - v, r - k - 1);
    prev = cur;
  }
  return offset;
}

SymTensor::SymTensor(int rank, std::size_t dim) : rank_(rank), dim_(dim) {
  check_rank(rank);
  check_dim(dim);
  c_.assign(multiset_count(dim, rank), 0.0);
}

SymTensor SymTensor::scalar(double value, std::size_t dim) {
  SymTensor t(0, dim);
  t.c_[0] = value;
  return t;
}

SymTensor SymTensor::from_vec(const Vec& v) {
  SymTensor t(1, v.dim());
  std::copy(v.begin(), v.end(), t.c_.begin());
  return t;
}

double SymTensor::component(std::span<const std::size_t> index) const {
  if (static_cast<int>(index.size()) != rank_) throw RankError("index length differs from rank");
  return c_[sorted_offset(index, dim_)];
}

double& SymTensor::component(std::span<const std::size_t> index) {
  if (static_cast<int>(index.size()) != rank_) throw RankError("index length differs from rank");
  return c_[sorted_offset(index, dim_)];
}

double SymTensor::value() const {
  if (rank_ != 0) throw RankError("value() requires a rank-0 tensor");
  return c_[0];
}

Vec SymTensor::to_vec() const {
  if (rank_ != 1) throw RankError("to_vec() requires a rank-1 tensor");
  return Vec(std::span<const double>(c_));
}

double SymTensor::evaluate(std::span<const Vec> args) const {
  if (static_cast<int>(args.size()) != rank_) throw RankError("argument count differs from rank");
  for (const auto& a : args) {
    if (a.dim() != dim_) throw DimensionError("tensor evaluation: dimension mismatch");
  }
  if (rank_ == 0) return c_[0];
  // Full sum over all n^r index tuples; r <= kMaxRank keeps this small.
  std::array<std::size_t, kMaxRank> tuple{};
  double total = 0.0;
  for (;;) {
    double prod = 1.0;
    for (int k = 0; k < rank_; ++k) prod *= args[static_cast<std::size_t>(k)][tuple[static_cast<std::size_t>(k)]];
    total += prod * c_[sorted_offset({tuple.data(), static_cast<std::size_t>(rank_)}, dim_)];
    int k = 0;
    while (k < rank_ && ++tuple[static_cast<std::size_t>(k)] == dim_) tuple[static_cast<std::size_t>(k++)] = 0;
    if (k == rank_) break;
  }
  return total;
}

double SymTensor::max_abs() const noexcept {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

void SymTensor::require_compatible(const SymTensor& o, const char* what) const {
  if (rank_ != o.rank_ || dim_ != o.dim_) {
    throw DimensionError(std::string(what) + ": tensors differ in rank or dimension");
  }
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  require_compatible(o, "tensor addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  require_compatible(o, "tensor subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

SymTensor& SymTensor::operator*=(double s) noexcept {
  for (double& x : c_) x *= s;
  return *this;
}

SymTensor sym_power(const Vec& x, int r) {
  SymTensor t(r, x.dim());
  const auto& idx = multi_indices(r, x.dim());
  auto c = t.coeffs();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    double p = 1.0;
    for (int j = 0; j < r; ++j) p *= x[idx[k][j]];
    c[k] = p;
  }
  return t;
}

SymTensor metric_tensor(std::size_t n) {
  SymTensor q(2, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::array<std::size_t, 2> ii{i, i};
    q.component(ii) = 1.0;
  }
  return q;
}

SymTensor contract(const SymTensor& t_tensor, const Vec& t) {
  if (t_tensor.rank() < 1) throw RankError("contract requires rank >= 1");
  if (t_tensor.dim() != t.dim()) throw DimensionError("contract: dimension mismatch");
  const int r = t_tensor.rank() - 1;
  const std::size_t n = t.dim();
  SymTensor out(r, n);
  const auto& idx = multi_indices(r, n);
  auto c = out.coeffs();
  std::array<std::size_t, kMaxRank> full{};
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (int j = 0; j < r; ++j) full[static_cast<std::size_t>(j) + 1] = idx[k][j];
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      full[0] = i;
      s += t[i] * t_tensor.component({full.data(), static_cast<std::size_t>(r) + 1});
    }
    c[k] = s;
  }
  return out;
}

SymTensor sym_product(const SymTensor& a, const SymTensor& b) {
  if (a.dim() != b.dim()) throw DimensionError("sym_product: dimension mismatch");
  const int r = a.rank(), s = b.rank(), total = r + s;
  check_rank(total);
  const std::size_t n = a.dim();
  SymTensor out(total, n);
  const auto& idx = multi_indices(total, n);
  auto c = out.coeffs();
  // Average over the C(r+s, r) ways of handing r positions of the sorted
  // multi-index to a.
  std::array<std::size_t, kMaxRank> ia{}, ib{};
  for (std::size_t k = 0; k < idx.size(); ++k) {
    double sum = 0.0;
    int subsets = 0;
    for (unsigned mask = 0; mask < (1u << total); ++mask) {
      if (std::popcount(mask) != r) continue;
      std::size_t na = 0, nb = 0;
      for (int p = 0; p < total; ++p) {
        if (mask & (1u << p)) ia[na++] = idx[k][p];
        else ib[nb++] = idx[k][p];
      }
      sum += a.component({ia.data(), na}) * b.component({ib.data(), nb});
      ++subsets;
    }
    c[k] = sum / subsets;
  }
  return out;
}

SymTensor linear_combination(std::span<const double> weights, std::span<const SymTensor> terms) {
  if (weights.size() != terms.size() || terms.empty()) {
    throw DomainError("linear_combination: weights and terms must be non-empty and equal in length");
  }
  SymTensor out(terms[0].rank(), terms[0].dim());
  for (std::size_t i = 0; i < terms.size(); ++i) out += weights[i] * terms[i];
  return out;
}

double kappa(int k) {
  if (k < 0) throw DomainError("kappa: negative dimension");
  // kappa_k = kappa_{k-2} * 2 pi / k, seeded with kappa_0 = 1, kappa_1 = 2.
  double v = (k % 2 == 0) ? 1.0 : 2.0;
  for (int j = (k % 2 == 0) ? 2 : 3; j <= k; j += 2) v = v * (2.0 * std::numbers::pi) / j;
  return v;
}

double omega(int k) { return k * kappa(k); }

void to_json(nlohmann::json& j, const SymTensor& t) {
  auto coeffs = nlohmann::json::array();
  const auto& idx = multi_indices(t.rank(), t.dim());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    auto mi = nlohmann::json::array();
    for (int p = 0; p < t.rank(); ++p) mi.push_back(static_cast<int>(idx[k][p]) + 1);
    coeffs.push_back(nlohmann::json::array({mi, t.coeffs()[k]}));
  }
  j = nlohmann::json{{"rank", t.rank()}, {"dim", t.dim()}, {"coeffs", coeffs}};
}

void from_json(const nlohmann::json& j, SymTensor& t) {
  const int rank = j.at("rank").get<int>();
  const auto dim = j.at("dim").get<std::size_t>();
  SymTensor out(rank, dim);
  std::vector<bool> seen(out.size(), false);
  for (const auto& entry : j.at("coeffs")) {
    const auto& mi = entry.at(0);
    if (static_cast<int>(mi.size()) != rank) throw DomainError("tensor JSON: index length differs from rank");
    std::array<std::size_t, kMaxRank> index{};
    for (std::size_t p = 0; p < mi.size(); ++p) {
      const int v = mi.at(p).get<int>();
      if (v < 1 || static_cast<std::size_t>(v) > dim) throw DomainError("tensor JSON: index out of 1..n");
      index[p] = static_cast<std::size_t>(v - 1);
    }
    const std::size_t off = sorted_offset({index.data(), mi.size()}, dim);
    if (seen[off]) throw DomainError("tensor JSON: duplicate multi-index");
    seen[off] = true;
    out.coeffs()[off] = entry.at(1).get<double>();
  }
  t = std::move(out);
}

void to_json(nlohmann::json& j, const Vec& v) {
  j = nlohmann::json::array();
  for (double x : v) j.push_back(x);
}

void from_json(const nlohmann::json& j, Vec& v) {
  std::vector<double> c = j.get<std::vector<double>>();
  v = Vec(std::span<const double>(c));
}

}  // namespace valab
