#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fluxring::oracle {

/// Computed vs reference eigenvalue lists and their deviation statistics.
struct OracleReport {
  std::string name;
  std::vector<double> computed;   // ascending
  std::vector<double> reference;  // ascending
  double max_abs_deviation = 0.0;
  double max_rel_deviation = 0.0;
  std::vector<std::pair<std::string, std::string>> metadata;
};

/// Fills the deviation fields; the lists must have equal length.
OracleReport make_report(std::string name, std::vector<double> computed, std::vector<double> reference);

}  // namespace fluxring::oracle
