#include "valab/report.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "valab/error.hpp"

namespace valab {

void finalize(VerifyReport& r) {
  if (r.lhs.rank() != r.rhs.rank() || r.lhs.dim() != r.rhs.dim()) {
    throw DimensionError("report '" + r.identity + "': lhs and rhs differ in shape");
  }
  if (r.lhs_std_error.size() != r.lhs.size()) r.lhs_std_error = SymTensor(r.lhs.rank(), r.lhs.dim());
  r.scale = r.rhs.max_abs();
  r.abs_diff = r.lhs - r.rhs;
  for (double& x : r.abs_diff.coeffs()) x = std::abs(x);
  r.rel_diff = r.scale > 0.0 ? r.abs_diff * (1.0 / r.scale) : r.abs_diff;
  const double floor = r.tolerance_used * r.scale + r.abs_floor;
  r.pass = true;
  for (std::size_t i = 0; i < r.abs_diff.size(); ++i) {
    const double allowed = std::max(3.0 * r.lhs_std_error.coeffs()[i], floor);
    if (!(r.abs_diff.coeffs()[i] <= allowed)) r.pass = false;
  }
}

void to_json(nlohmann::json& j, const VerifyReport& r) {
  j = nlohmann::json{
      {"schema", kReportSchema},
      {"identity", r.identity},
      {"body_spec", r.body_spec},
      {"lhs", {{"value", r.lhs}, {"std_error", r.lhs_std_error}}},
      {"rhs", r.rhs},
      {"abs_diff", r.abs_diff},
      {"rel_diff", r.rel_diff},
      {"scale", r.scale},
      {"tolerance_used", r.tolerance_used},
      {"abs_floor", r.abs_floor},
      {"pass", r.pass},
      {"method", r.method},
      {"seed", r.seed},
      {"samples_used", r.samples_used},
      {"runtime_ms", r.runtime_ms},
  };
}

void from_json(const nlohmann::json& j, VerifyReport& r) {
  if (j.at("schema").get<std::string>() != kReportSchema) throw DomainError("report JSON: unsupported schema");
  r.identity = j.at("identity").get<std::string>();
  r.body_spec = j.at("body_spec").get<std::string>();
  r.lhs = j.at("lhs").at("value").get<SymTensor>();
  r.lhs_std_error = j.at("lhs").at("std_error").get<SymTensor>();
  r.rhs = j.at("rhs").get<SymTensor>();
  r.abs_diff = j.at("abs_diff").get<SymTensor>();
  r.rel_diff = j.at("rel_diff").get<SymTensor>();
  r.scale = j.at("scale").get<double>();
  r.tolerance_used = j.at("tolerance_used").get<double>();
  r.abs_floor = j.at("abs_floor").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.method = j.at("method").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.samples_used = j.at("samples_used").get<std::uint64_t>();
  r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
}

}  // namespace valab
