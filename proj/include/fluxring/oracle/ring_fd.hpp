#pragma once

#include <vector>

#include "fluxring/oracle/banded.hpp"
#include "fluxring/oracle/report.hpp"

namespace fluxring::oracle {

inline constexpr int kDefaultRingGrid = 1024;
inline constexpr int kMinRingGrid = 64;
inline constexpr int kMaxDenseRingGrid = 256;

enum class FdSolver { Banded, Dense };

struct RingFdOptions {
  int order = 4;   // 2 or 4
  int levels = 9;
  FdSolver solver = FdSolver::Banded;
};

/// Periodic finite-difference matrix of -d^2/dphi^2 + ell^2 - 2 i (sigma ell) d/dphi
/// on n_grid points, h = 2 pi / n_grid. The first-derivative stencil is
/// antisymmetric so the matrix is exactly Hermitian.
PeriodicBandedHermitian ring_fd_matrix(int ell, double sigma_ell, int n_grid, int order = 4);

/// Eigenvalue of the circulant matrix on the Fourier mode e^{i m phi}.
double ring_fd_symbol(int ell, double sigma_ell, int n_grid, int m, int order = 4);

/// Lowest `count` symbol values over all n_grid Fourier modes, ascending.
std::vector<double> ring_fd_symbol_levels(int ell, double sigma_ell, int n_grid, int count, int order = 4);

/// Lowest `count` values of ell^2 + m^2 + 2 sigma_ell m, ascending.
std::vector<double> ring_analytic_levels(int ell, double sigma_ell, int count);

/// Diagonalizes the FD matrix and compares its lowest levels with the
/// analytic ring spectrum.
OracleReport ring_fd_spectrum(int ell, double sigma_ell, int n_grid = kDefaultRingGrid,
                              const RingFdOptions& options = {});

}  // namespace fluxring::oracle
