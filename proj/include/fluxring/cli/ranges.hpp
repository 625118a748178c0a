#pragma once

#include <string>
#include <vector>

namespace fluxring::cli {

/// Parses a grid argument: `min:max:count` (inclusive, count >= 2), a
/// comma-separated list, or a single number. Throws UsageError.
std::vector<double> parse_grid(const std::string& text);

/// True when every entry is an integer to 1e-12.
bool all_integer(const std::vector<double>& values);

}  // namespace fluxring::cli
