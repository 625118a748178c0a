#include "fluxring/ring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fluxring/errors.hpp"

namespace fluxring {

double ring_energy(int ell, double sigma_ell, int m) {
  const double l = ell;
  const double mm = m;
  return l * l + mm * mm + 2.0 * sigma_ell * mm;
}

int ground_m(double sigma_ell) {
  return -static_cast<int>(std::floor(sigma_ell + 0.5));
}

bool ground_is_degenerate(double sigma_ell, double tol) {
  const double frac = sigma_ell - std::floor(sigma_ell);
  return std::abs(frac - 0.5) <= tol;
}

namespace {

// E_m - E_ref with ell^2 cancelled analytically.
double ring_excitation(double sigma_ell, int m, int ref) {
  const double mm = m;
  const double rr = ref;
  return (mm * mm - rr * rr) + 2.0 * sigma_ell * (mm - rr);
}

}  // namespace

double ring_gap(int /*ell*/, double sigma_ell) {
  const int m0 = ground_m(sigma_ell);
  double gap = std::numeric_limits<double>::infinity();
  for (int m = m0 - 3; m <= m0 + 3; ++m) {
    if (m == m0) continue;
    gap = std::min(gap, ring_excitation(sigma_ell, m, m0));
  }
  return gap;
}

int min_ring_window(std::span<const double> sigma_ell_grid) {
  double max_abs = 0.0;
  for (double s : sigma_ell_grid) max_abs = std::max(max_abs, std::abs(s));
  return static_cast<int>(std::ceil(max_abs)) + 2;
}

std::vector<RingSweepRow> ring_spectrum_sweep(int ell, std::span<const double> sigma_ell_grid,
                                              int m_window) {
  if (sigma_ell_grid.empty()) throw UsageError("sigma_ell grid is empty");
  if (m_window < min_ring_window(sigma_ell_grid)) {
    throw UsageError("m window too small: need at least ceil(max|sigma_ell|) + 2 = " +
                     std::to_string(min_ring_window(sigma_ell_grid)));
  }
  std::vector<RingSweepRow> rows;
  rows.reserve(sigma_ell_grid.size() * static_cast<std::size_t>(2 * m_window + 1));
  for (double s : sigma_ell_grid) {
    const int m0 = ground_m(s);
    const double gap = ring_gap(ell, s);
    const bool degenerate = gap == 0.0;
    for (int m = -m_window; m <= m_window; ++m) {
      rows.push_back({s, m, ring_energy(ell, s, m), m == m0, degenerate && m == m0, gap});
    }
  }
  return rows;
}

std::complex<double> ring_wavefunction(int m, double phi) {
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  // Reduce m*phi modulo 2 pi so that phi and phi + 2 pi agree to rounding.
  const double arg = std::remainder(static_cast<double>(m) * phi, 2.0 * std::numbers::pi);
  return std::polar(norm, arg);
}

}  // namespace fluxring
