#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace fluxring::cli {

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::string unit;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// %.12e
std::string format_real(double x);

/// x rounded to the 13 significant digits of format_real.
double rounded(double x);

/// `# unit:` comment line, one header row, then the rows.
void write_csv(const Table& table, std::ostream& out);

/// {"unit": ..., "columns": [...], "rows": [{column: value, ...}, ...]}
void write_json(const Table& table, std::ostream& out);

}  // namespace fluxring::cli
