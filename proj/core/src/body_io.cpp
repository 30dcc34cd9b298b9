#include "valab/body_io.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "valab/error.hpp"
#include "valab/generators.hpp"

namespace valab {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view s, std::string_view spec) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("body spec '" + std::string(spec) + "': bad number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

nlohmann::json body_to_json(const PolytopeBody& body) {
  return nlohmann::json{{"dim", body.dim()}, {"vertices", body.vertices()}};
}

PolytopeBody body_from_json(const nlohmann::json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  const auto pts = j.at("vertices").get<std::vector<Vec>>();
  for (const auto& p : pts) {
    if (p.dim() != dim) throw DimensionError("body JSON: vertex dimension differs from \"dim\"");
  }
  return PolytopeBody::from_points(pts);
}

PolytopeBody read_body(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open body file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed body file " + path.string() + ": " + e.what());
  }
  return body_from_json(j);
}

void write_body(const PolytopeBody& body, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write body file " + path.string());
  out << body_to_json(body).dump(2) << '\n';
}

PolytopeBody parse_body_spec(std::string_view spec, std::size_t dim) {
  if (spec.ends_with(".json")) {
    auto body = read_body(std::filesystem::path(std::string(spec)));
    if (dim != 0 && body.dim() != dim) {
      throw DimensionError("body file " + std::string(spec) + " has dimension " + std::to_string(body.dim()));
    }
    return body;
  }
  const auto parts = split(spec, ':');
  const auto name = parts[0];
  if (name == "cube") {
    if (parts.size() == 1) return cube(dim);
    if (parts.size() == 3) return cube(dim, parse_number<double>(parts[1], spec), parse_number<double>(parts[2], spec));
  } else if (name == "simplex" && parts.size() == 1) {
    return simplex(dim);
  } else if ((name == "cross_polytope" || name == "cross") && parts.size() == 1) {
    return cross_polytope(dim);
  } else if (name == "random" && (parts.size() == 2 || parts.size() == 3)) {
    const auto seed = parse_number<std::uint64_t>(parts[1], spec);
    const std::size_t count = parts.size() == 3 ? parse_number<std::size_t>(parts[2], spec) : 12;
    return random_body(dim, seed, count);
  }
  throw DomainError("unknown body spec '" + std::string(spec) + "'");
}

}  // namespace valab
