#pragma once

#include <span>
#include <vector>

namespace fluxring {

/// mu_m = sqrt(ell^2 + m^2 + 2 (sigma ell) m).
double mu(int ell, double sigma_ell, int m);

/// E_{n,m} = 2n + mu_m + 1, in units of hbar*Omega.
double harmonic_energy(int ell, double sigma_ell, int n, int m);

struct HarmonicQuantumNumbers {
  int n = 0;
  int m = 0;
};

/// (0, -floor(sigma_ell + 1/2)).
HarmonicQuantumNumbers ground_quantum_numbers(double sigma_ell);

/// Lowest excitation above the ground state, hbar*Omega units.
double harmonic_gap(int ell, double sigma_ell);

struct HarmonicState {
  int n = 0;
  int m = 0;
  double mu = 0.0;
  double energy = 0.0;
};

/// Radial eigenfunction
///   f(r) = C (r^2/2)^{mu/2} exp(-r^2/4) L_n^mu(r^2/2),  C = sqrt(n! / Gamma(n + mu + 1)),
/// with r in units of the oscillator length. Normalized to int f^2 r dr = 1.
class RadialFunction {
 public:
  RadialFunction(int n, int m, double mu);

  double operator()(double r) const;

  int n() const { return n_; }
  int m() const { return m_; }
  double mu() const { return mu_; }
  double log_norm() const { return log_norm_; }

  /// Location of the maximum of |f| for n = 0, sqrt(2 mu).
  double ground_peak() const;

 private:
  int n_;
  int m_;
  double mu_;
  double log_norm_;  // ln C
};

RadialFunction radial_wavefunction(int ell, double sigma_ell, int n, int m);

struct HarmonicSweepRow {
  double sigma_ell = 0.0;
  int n = 0;
  int m = 0;
  double mu = 0.0;
  double energy = 0.0;
  bool is_ground = false;
  double gap = 0.0;
};

/// Energies for 0 <= n <= n_max and |m| <= m_window at each grid point,
/// grid-major, then n, then ascending m.
std::vector<HarmonicSweepRow> harmonic_spectrum_sweep(int ell, std::span<const double> sigma_ell_grid,
                                                      int n_max, int m_window);

struct RadialSample {
  double r = 0.0;
  double f = 0.0;
};

/// f(r) on `points` equally spaced radii in [0, r_max].
std::vector<RadialSample> radial_profile(const RadialFunction& f, double r_max, int points);

}  // namespace fluxring
