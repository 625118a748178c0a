#include "fluxring/cli/ranges.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "fluxring/errors.hpp"

namespace fluxring::cli {

namespace {

double parse_number(const std::string& token, const std::string& whole) {
  if (token.empty()) throw UsageError("empty number in '" + whole + "'");
  const char* begin = token.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(value)) {
    throw UsageError("cannot parse '" + token + "' as a number in '" + whole + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) throw UsageError("empty grid");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("range must be min:max:count, got '" + text + "'");
    const double lo = parse_number(parts[0], text);
    const double hi = parse_number(parts[1], text);
    const double count_d = parse_number(parts[2], text);
    if (count_d != std::floor(count_d) || count_d < 2 || count_d > 1e7) {
      throw UsageError("range count must be an integer >= 2, got '" + parts[2] + "'");
    }
    if (hi < lo) throw UsageError("range max is below min in '" + text + "'");
    const int count = static_cast<int>(count_d);
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) grid[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (count - 1);
    grid.back() = hi;
    return grid;
  }
  std::vector<double> values;
  for (const std::string& token : split(text, ',')) values.push_back(parse_number(token, text));
  return values;
}

bool all_integer(const std::vector<double>& values) {
  for (double v : values) {
    if (std::abs(v - std::round(v)) > 1e-12) return false;
  }
  return true;
}

}  // namespace fluxring::cli
