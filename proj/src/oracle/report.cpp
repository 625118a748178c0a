#include "fluxring/oracle/report.hpp"

#include <algorithm>
#include <cmath>

#include "fluxring/errors.hpp"

namespace fluxring::oracle {

OracleReport make_report(std::string name, std::vector<double> computed, std::vector<double> reference) {
  if (computed.size() != reference.size()) {
    throw ValidationError("oracle report lists differ in length");
  }
  OracleReport report;
  report.name = std::move(name);
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const double dev = std::abs(computed[i] - reference[i]);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    const double scale = std::abs(reference[i]);
    if (scale > 0.0) report.max_rel_deviation = std::max(report.max_rel_deviation, dev / scale);
  }
  report.computed = std::move(computed);
  report.reference = std::move(reference);
  return report;
}

}  // namespace fluxring::oracle
