#include "fluxring/cli/output.hpp"

#include <cstdio>
#include <cstdlib>

#include "fluxring/errors.hpp"
#include "json.hpp"

namespace fluxring::cli {

namespace {

std::string csv_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  return std::get<std::string>(cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return rounded(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return *i;
  if (const auto* b = std::get_if<bool>(&cell)) return *b;
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

double rounded(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

void write_csv(const Table& table, std::ostream& out) {
  out << "# unit: " << table.unit << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw ValidationError("row width does not match the header");
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["unit"] = table.unit;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw ValidationError("row width does not match the header");
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = json_cell(row[c]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace fluxring::cli
