#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fluxring/oracle/radial_fd.hpp"
#include "fluxring/oracle/ring_fd.hpp"

namespace fluxring::cli {

struct VerifyOptions {
  int ring_grid = oracle::kDefaultRingGrid;
  int radial_grid = oracle::kDefaultRadialGrid;
  std::optional<double> tolerance;  // replaces every per-check tolerance
};

struct VerifyCheck {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed = false;
  int ring_grid = 0;
  int radial_grid = 0;
};

/// Runs the oracle suite: eigensolver self-tests, ring and radial FD
/// spectra, quadrature norms, pencil and block-scan checks.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace fluxring::cli
