#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "valab/body_io.hpp"
#include "valab/error.hpp"
#include "valab/harness.hpp"
#include "valab/polarization.hpp"
#include "valab/valuations.hpp"

namespace {

using nlohmann::json;
using namespace valab;

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << j.dump(2) << '\n';
}

struct VerifyArgs {
  std::string config;
  std::string identity = "all";
  std::vector<std::string> bodies;
  std::vector<std::size_t> dims;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string method;
  double tol = -1;
  std::vector<std::string> fields;
  std::size_t directions = 20;
  unsigned workers = 1;
  std::string out;
  bool json_stdout = false;
};

int run_verify(const VerifyArgs& a, const CLI::App& cmd) {
  SuiteConfig cfg;
  if (!a.config.empty()) {
    std::ifstream f(a.config);
    if (!f) throw Error("cannot read config " + a.config);
    cfg = suite_config_from_json(json::parse(f));
  }
  auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
  if (given("--identity") || a.config.empty()) cfg.identities = parse_identities(a.identity);
  if (given("--body")) cfg.bodies = a.bodies;
  if (given("--dim")) cfg.dims = a.dims;
  if (given("--samples") || a.config.empty()) cfg.samples = a.samples;
  if (given("--seed") || a.config.empty()) cfg.seed = a.seed;
  if (given("--method")) cfg.method = parse_method(a.method);
  if (given("--tol")) cfg.tol = a.tol;
  if (given("--field")) {
    cfg.fields.clear();
    for (const auto& f : a.fields) cfg.fields.push_back(parse_field(f));
  }
  if (given("--directions")) cfg.tv17_directions = a.directions;
  if (given("--workers")) cfg.workers = a.workers;

  const auto reports = run_suite(cfg);
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(r);
  if (a.json_stdout) {
    std::cout << arr.dump(2) << '\n';
  } else {
    print_table(std::cout, reports);
  }
  if (!a.out.empty()) emit(arr, a.out);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.pass; });
  return ok ? 0 : 1;
}

struct ComputeArgs {
  std::string functional;
  int rank = -1;
  std::string body = "cube";
  std::size_t dim = 3;
  std::string out;
};

int run_compute(const ComputeArgs& a) {
  const PolytopeBody p = parse_body_spec(a.body, a.dim);
  json j{{"functional", a.functional}, {"body", a.body}, {"dim", p.dim()}};
  const auto& f = a.functional;
  if (f == "volume") {
    j["value"] = p.volume();
  } else if (f == "z") {
    j["value"] = p.moment();
  } else if (f == "q1") {
    j["value"] = q1(p);
  } else if (f == "upsilon" || f == "xi") {
    const int r = a.rank < 0 ? 1 : a.rank;
    j["rank"] = r;
    j["value"] = f == "upsilon" ? upsilon(p, r) : xi(p, r);
  } else if (f == "psi2" || f == "psi") {
    const int r = a.rank < 0 ? 2 : a.rank;
    j["rank"] = r;
    j["value"] = psi(p, r);
  } else if (f == "cone_volume") {
    const auto cv = cone_volume_atoms(p);
    json atoms = json::array();
    for (const auto& at : cv.atoms) atoms.push_back({{"normal", at.normal}, {"mass", at.mass}});
    j["atoms"] = atoms;
    j["total"] = cv.total();
    j["origin_interior"] = cv.origin_interior;
  } else {
    throw DomainError("unknown functional '" + f + "' (expected volume, z, q1, upsilon, xi, cone_volume or psi2)");
  }
  emit(j, a.out);
  return 0;
}

struct MixedArgs {
  std::string functional;
  std::vector<std::string> bodies;
  std::size_t dim = 3;
  int degree = -1;
  std::vector<double> direction;
  std::string out;
};

int run_mixed(const MixedArgs& a) {
  PolarizationRequest req;
  req.functional = parse_functional(a.functional);
  for (const auto& b : a.bodies) req.bodies.push_back(parse_body_spec(b, a.dim));
  const std::size_t n = req.bodies.empty() ? a.dim : req.bodies[0].dim();
  req.degree = a.degree < 0 ? natural_degree(req.functional, n) : a.degree;
  if (!a.direction.empty()) req.direction = normalized(Vec(std::span<const double>(a.direction)));
  const SymTensor v = polarize(req);
  json j{{"functional", functional_name(req.functional)}, {"bodies", a.bodies}, {"degree", req.degree}, {"value", v}};
  emit(j, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valuation-lab: exact tensor valuations of polytopes and spherical-integral identity checks"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check integral identities against quadrature");
  verify->add_option("--config", va.config, "Suite config JSON");
  verify->add_option("--identity", va.identity, "cauchy|theorem21|corollary22|lemma31|eq41|tv17|all");
  verify->add_option("--body", va.bodies, "Body spec or JSON file (repeatable)");
  verify->add_option("--dim", va.dims, "Dimension(s)");
  verify->add_option("--samples", va.samples, "Monte Carlo sample count (even)");
  verify->add_option("--seed", va.seed, "Seed");
  verify->add_option("--method", va.method, "mc|grid (default: grid for n=2, mc otherwise)");
  verify->add_option("--tol", va.tol, "Relative tolerance");
  verify->add_option("--field", va.fields, "eq41 fields: 1, x, x2 (repeatable)");
  verify->add_option("--directions", va.directions, "tv17 direction count");
  verify->add_option("--workers", va.workers, "Quadrature threads");
  verify->add_option("--out", va.out, "Write reports as a JSON array");
  verify->add_flag("--json", va.json_stdout, "Print the JSON array instead of the table");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Evaluate a valuation on one body");
  compute->add_option("--functional", ca.functional, "volume|z|q1|upsilon|xi|cone_volume|psi2")->required();
  compute->add_option("--rank", ca.rank, "Tensor rank for upsilon, xi, psi");
  compute->add_option("--body", ca.body, "Body spec or JSON file");
  compute->add_option("--dim", ca.dim, "Dimension for generated bodies");
  compute->add_option("--out", ca.out, "Output file (default stdout)");

  MixedArgs ma;
  auto* mixed = app.add_subcommand("mixed", "Polarize a Minkowski-polynomial functional");
  mixed->add_option("--functional", ma.functional, "q1|upsilon1|z|shadow_area")->required();
  mixed->add_option("--bodies", ma.bodies, "Body specs or JSON files")->required();
  mixed->add_option("--dim", ma.dim, "Dimension for generated bodies");
  mixed->add_option("--degree", ma.degree, "Polynomial degree (default: natural degree)");
  mixed->add_option("--direction", ma.direction, "Projection direction for shadow_area");
  mixed->add_option("--out", ma.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(va, *verify);
    if (*compute) return run_compute(ca);
    if (*mixed) return run_mixed(ma);
  } catch (const std::exception& e) {
    std::cerr << "valuation-lab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
