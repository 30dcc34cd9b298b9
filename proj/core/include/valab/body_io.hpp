#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "valab/polytope.hpp"

namespace valab {

/// {"dim": n, "vertices": [[x1, ..., xn], ...]}
nlohmann::json body_to_json(const PolytopeBody& body);
PolytopeBody body_from_json(const nlohmann::json& j);

PolytopeBody read_body(const std::filesystem::path& path);
void write_body(const PolytopeBody& body, const std::filesystem::path& path);

/// Body from a spec string:
///   cube | cube:A:B | simplex | cross_polytope | random:SEED | random:SEED:COUNT
/// or a path to a body JSON file (anything ending in .json).
/// `dim` is used by the generators and checked against files.
PolytopeBody parse_body_spec(std::string_view spec, std::size_t dim);

}  // namespace valab
