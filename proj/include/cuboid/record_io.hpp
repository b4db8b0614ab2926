#pragma once

#include "cuboid/verify.hpp"

#include <json.hpp>

#include <string>

namespace cuboid {

/// Keys: b, c, outcome; plus flag/flags for DEGENERATE, x and d root lists
/// when solved, perm for a satisfied pairing, candidate for PERFECT_CUBOID,
/// and note when non-empty. Rationals are "p/q" strings.
nlohmann::json record_to_json(const SearchRecord& rec);
SearchRecord record_from_json(const nlohmann::json& j);

/// Compact single-line JSON, no trailing newline.
std::string format_record_line(const SearchRecord& rec);

}  // namespace cuboid
