#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "carcass/pl_map.hpp"

namespace carcass {

// Map documents are JSON objects with a single field
//   {"breakpoints": [["0","0"], ["1/2","1"], ["1","0"]]}
// where each coordinate is an exact rational string "n" or "p/q".
// Errors carry the line (and column for syntax errors) of the offending
// token.
PLMap parse_map(std::string_view text);
PLMap load_map(const std::filesystem::path& path);

std::string format_map(const PLMap& m);
void save_map(const PLMap& m, const std::filesystem::path& path);

// Two whitespace-separated exact columns, one point per line.
std::string format_points(std::span<const Point> points);

} // namespace carcass
