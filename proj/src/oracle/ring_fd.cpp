#include "fluxring/oracle/ring_fd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "fluxring/errors.hpp"
#include "fluxring/oracle/hermitian.hpp"

namespace fluxring::oracle {

namespace {

void check_inputs(int ell, double sigma_ell, int n_grid, int order) {
  if (n_grid < kMinRingGrid) throw UsageError("ring grid must have at least 64 points");
  if (order != 2 && order != 4) throw UsageError("finite-difference order must be 2 or 4");
  if (ell < 0) throw DomainError("ell must be non-negative");
  if (!std::isfinite(sigma_ell)) throw DomainError("sigma_ell must be finite");
  if (ell == 0 && sigma_ell != 0.0) throw DomainError("ell = 0 admits only sigma_ell = 0");
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

}  // namespace

PeriodicBandedHermitian ring_fd_matrix(int ell, double sigma_ell, int n_grid, int order) {
  check_inputs(ell, sigma_ell, n_grid, order);
  const double h = 2.0 * std::numbers::pi / n_grid;
  const double l2 = static_cast<double>(ell) * ell;
  const int p = order / 2;
  PeriodicBandedHermitian m(n_grid, p);
  const std::complex<double> i1(0.0, 1.0);

  std::complex<double> d0;
  std::complex<double> d1;
  std::complex<double> d2;
  if (order == 2) {
    d0 = 2.0 / (h * h) + l2;
    d1 = -1.0 / (h * h) - i1 * sigma_ell / h;
  } else {
    d0 = 30.0 / (12.0 * h * h) + l2;
    d1 = -16.0 / (12.0 * h * h) - i1 * (4.0 * sigma_ell / (3.0 * h));
    d2 = 1.0 / (12.0 * h * h) + i1 * (sigma_ell / (6.0 * h));
  }
  std::fill(m.upper(0).begin(), m.upper(0).end(), d0);
  std::fill(m.upper(1).begin(), m.upper(1).end(), d1);
  if (order == 4) std::fill(m.upper(2).begin(), m.upper(2).end(), d2);
  return m;
}

double ring_fd_symbol(int ell, double sigma_ell, int n_grid, int m, int order) {
  check_inputs(ell, sigma_ell, n_grid, order);
  const double h = 2.0 * std::numbers::pi / n_grid;
  const double t = m * h;
  const double l2 = static_cast<double>(ell) * ell;
  if (order == 2) {
    return (2.0 - 2.0 * std::cos(t)) / (h * h) + l2 + 2.0 * sigma_ell * std::sin(t) / h;
  }
  return (30.0 - 32.0 * std::cos(t) + 2.0 * std::cos(2.0 * t)) / (12.0 * h * h) + l2 +
         2.0 * sigma_ell * (8.0 * std::sin(t) - std::sin(2.0 * t)) / (6.0 * h);
}

std::vector<double> ring_fd_symbol_levels(int ell, double sigma_ell, int n_grid, int count, int order) {
  if (count < 1 || count > n_grid) throw UsageError("level count out of range");
  std::vector<double> all;
  all.reserve(static_cast<std::size_t>(n_grid));
  for (int m = -(n_grid / 2) + 1; m <= n_grid / 2; ++m) all.push_back(ring_fd_symbol(ell, sigma_ell, n_grid, m, order));
  std::sort(all.begin(), all.end());
  all.resize(static_cast<std::size_t>(count));
  return all;
}

std::vector<double> ring_analytic_levels(int ell, double sigma_ell, int count) {
  if (count < 1) throw UsageError("level count must be positive");
  const int centre = static_cast<int>(std::lround(-sigma_ell));
  std::vector<double> all;
  for (int m = centre - count - 2; m <= centre + count + 2; ++m) {
    all.push_back(static_cast<double>(ell) * ell + static_cast<double>(m) * m + 2.0 * sigma_ell * m);
  }
  std::sort(all.begin(), all.end());
  all.resize(static_cast<std::size_t>(count));
  return all;
}

OracleReport ring_fd_spectrum(int ell, double sigma_ell, int n_grid, const RingFdOptions& options) {
  check_inputs(ell, sigma_ell, n_grid, options.order);
  if (options.levels < 1 || options.levels > n_grid) throw UsageError("level count out of range");

  const PeriodicBandedHermitian h = ring_fd_matrix(ell, sigma_ell, n_grid, options.order);
  std::vector<double> computed;
  if (options.solver == FdSolver::Dense) {
    if (n_grid > kMaxDenseRingGrid) throw UsageError("dense ring solver is limited to 256 grid points");
    const HermitianEigs eigs = hermitian_eigs(h.dense());
    computed.assign(eigs.values.data(), eigs.values.data() + options.levels);
  } else {
    computed = h.lowest_eigenvalues(options.levels);
  }

  OracleReport report =
      make_report("ring_fd", std::move(computed), ring_analytic_levels(ell, sigma_ell, options.levels));
  report.metadata = {
      {"ell", std::to_string(ell)},
      {"sigma_ell", format_double(sigma_ell)},
      {"n_grid", std::to_string(n_grid)},
      {"order", std::to_string(options.order)},
      {"solver", options.solver == FdSolver::Dense ? "dense" : "banded"},
      {"levels", std::to_string(options.levels)},
  };
  return report;
}

}  // namespace fluxring::oracle
