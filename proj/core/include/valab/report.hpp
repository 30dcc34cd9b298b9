#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "valab/sym_tensor.hpp"

namespace valab {

inline constexpr const char* kReportSchema = "valuation-lab/report/v1";

/// Comparison of a quadrature estimate (lhs) against an exact value (rhs).
/// Component i passes iff |lhs_i - rhs_i| <= max(3 se_i, tol * scale + abs_floor)
/// with scale = max_i |rhs_i|.
struct VerifyReport {
  std::string identity;
  std::string body_spec;
  SymTensor lhs;
  SymTensor lhs_std_error;
  SymTensor rhs;
  SymTensor abs_diff;
  SymTensor rel_diff;  // abs_diff / scale, or abs_diff when scale = 0
  double scale = 0;
  double tolerance_used = 0;
  double abs_floor = 1e-9;
  bool pass = false;
  std::string method;
  std::uint64_t seed = 0;
  std::uint64_t samples_used = 0;
  std::int64_t runtime_ms = 0;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Fills abs_diff, rel_diff, scale and pass from lhs, lhs_std_error, rhs and
/// the tolerances.
void finalize(VerifyReport& r);

void to_json(nlohmann::json& j, const VerifyReport& r);
void from_json(const nlohmann::json& j, VerifyReport& r);

}  // namespace valab
