#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fluxring {

/// E_m = ell^2 + m^2 + 2 (sigma ell) m, in units of hbar^2/2I.
double ring_energy(int ell, double sigma_ell, int m);

/// Ground-state angular momentum -floor(sigma_ell + 1/2). At half-integer
/// sigma_ell the two degenerate minimizers are resolved by this formula.
int ground_m(double sigma_ell);

/// True when the ground state is doubly degenerate (sigma_ell half-integer).
bool ground_is_degenerate(double sigma_ell, double tol = 1e-12);

/// Lowest excitation energy above the ground state, hbar^2/2I units.
/// Independent of ell; vanishes at half-integer sigma_ell, equals 1 at
/// integer sigma_ell.
double ring_gap(int ell, double sigma_ell);

struct RingState {
  int m = 0;
  double energy = 0.0;
};

struct RingSweepRow {
  double sigma_ell = 0.0;
  int m = 0;
  double energy = 0.0;
  bool is_ground = false;
  bool degenerate = false;  // ground state shares its energy with m_check - 1 or m_check + 1
  double gap = 0.0;
};

/// Energies for every |m| <= m_window at each grid point, grid-major then
/// ascending m. Requires m_window >= ceil(max |sigma_ell|) + 2.
std::vector<RingSweepRow> ring_spectrum_sweep(int ell, std::span<const double> sigma_ell_grid,
                                              int m_window);

/// Minimum admissible window for a grid.
int min_ring_window(std::span<const double> sigma_ell_grid);

/// Psi_m(phi) = exp(i m phi) / sqrt(2 pi).
std::complex<double> ring_wavefunction(int m, double phi);

}  // namespace fluxring
