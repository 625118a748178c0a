#pragma once

#include <Eigen/Core>
#include <vector>

#include "fluxring/oracle/report.hpp"

namespace fluxring::oracle {

inline constexpr int kDefaultRadialGrid = 4000;
inline constexpr int kMinRadialGrid = 2000;
inline constexpr double kRadialPad = 12.0;
inline constexpr double kMinRadialPad = 10.0;
inline constexpr double kLeakageLimit = 1e-6;

/// sqrt(2 mu) + 12.
double default_radial_extent(double mu);

struct RadialFdEigenpair {
  double energy = 0.0;
  std::vector<double> r;  // interior grid points
  Eigen::VectorXd u;      // u(r) = sqrt(r) g(r), normalized with h sum u^2 = 1
  double tail = 0.0;      // sqrt(h sum u^2) over the last unit of radius
};

/// Level `n` (0-based) of
///   -u'' + [(mu^2 - 1/4)/r^2 + r^2/4] u = E u,  u(0) = u(r_max) = 0,
/// on r_i = i h, i = 1..n_grid, h = r_max / (n_grid + 1).
RadialFdEigenpair radial_fd_eigenpair(double mu, double r_max, int n_grid, int n);

/// Lowest `levels` radial FD eigenvalues for angular momentum m against
/// 2n + mu_m + 1. Throws DomainSizeError if any eigenfunction leaks to the
/// outer boundary.
OracleReport radial_fd_spectrum(int ell, double sigma_ell, int m, double r_max, int n_grid,
                                int levels = 4);

/// Same on the default grid.
OracleReport radial_fd_spectrum(int ell, double sigma_ell, int m, int levels = 4);

}  // namespace fluxring::oracle
