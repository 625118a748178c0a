#include "fluxring/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fluxring/errors.hpp"
#include "fluxring/ring.hpp"
#include "fluxring/special.hpp"

namespace fluxring {

double mu(int ell, double sigma_ell, int m) {
  const double l = ell;
  const double mm = m;
  const double radicand = l * l + mm * mm + 2.0 * sigma_ell * mm;
  if (radicand < 0.0) {
    throw DomainError("mu_m^2 = ell^2 + m^2 + 2 sigma ell m is negative (|sigma| > 1?)");
  }
  return std::sqrt(radicand);
}

double harmonic_energy(int ell, double sigma_ell, int n, int m) {
  if (n < 0) throw DomainError("radial quantum number n must be >= 0");
  return 2.0 * n + mu(ell, sigma_ell, m) + 1.0;
}

HarmonicQuantumNumbers ground_quantum_numbers(double sigma_ell) {
  return {0, ground_m(sigma_ell)};
}

double harmonic_gap(int ell, double sigma_ell) {
  const int m0 = ground_m(sigma_ell);
  const double mu0 = mu(ell, sigma_ell, m0);
  // The n = 1 excitation at m_check costs exactly 2.
  double gap = 2.0;
  for (int m = m0 - 6; m <= m0 + 6; ++m) {
    if (m == m0) continue;
    gap = std::min(gap, mu(ell, sigma_ell, m) - mu0);
  }
  return gap;
}

RadialFunction::RadialFunction(int n, int m, double mu) : n_(n), m_(m), mu_(mu) {
  if (n < 0) throw DomainError("radial quantum number n must be >= 0");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("mu must be finite and >= 0");
  log_norm_ = 0.5 * (std::lgamma(n + 1.0) - log_gamma(n + mu + 1.0));
  // Log of the n = 0 envelope at its maximum x = mu; the Laguerre factor only
  // shifts this by O(n ln(n + mu)).
  const double log_peak = log_norm_ + (mu > 0.0 ? 0.5 * mu * (std::log(mu) - 1.0) : 0.0) +
                          n * std::log(n + mu + 1.0);
  if (log_peak > std::log(std::numeric_limits<double>::max()) - 1.0) {
    throw RangeError("radial function peak is not representable in double precision");
  }
}

double RadialFunction::operator()(double r) const {
  if (r < 0.0) throw DomainError("radius must be >= 0");
  const double x = 0.5 * r * r;
  const double lag = laguerre_gen(n_, mu_, x);
  if (x == 0.0) return mu_ > 0.0 ? 0.0 : std::exp(log_norm_) * lag;
  const double value = std::exp(log_norm_ + 0.5 * mu_ * std::log(x) - 0.5 * x) * lag;
  if (!std::isfinite(value)) throw RangeError("radial function overflow");
  return value;
}

double RadialFunction::ground_peak() const { return std::sqrt(2.0 * mu_); }

RadialFunction radial_wavefunction(int ell, double sigma_ell, int n, int m) {
  return RadialFunction(n, m, mu(ell, sigma_ell, m));
}

std::vector<HarmonicSweepRow> harmonic_spectrum_sweep(int ell, std::span<const double> sigma_ell_grid,
                                                      int n_max, int m_window) {
  if (sigma_ell_grid.empty()) throw UsageError("sigma_ell grid is empty");
  if (n_max < 0) throw UsageError("n_max must be >= 0");
  if (m_window < min_ring_window(sigma_ell_grid)) {
    throw UsageError("m window too small: need at least ceil(max|sigma_ell|) + 2 = " +
                     std::to_string(min_ring_window(sigma_ell_grid)));
  }
  std::vector<HarmonicSweepRow> rows;
  rows.reserve(sigma_ell_grid.size() * static_cast<std::size_t>((n_max + 1) * (2 * m_window + 1)));
  for (double s : sigma_ell_grid) {
    const HarmonicQuantumNumbers g = ground_quantum_numbers(s);
    const double gap = harmonic_gap(ell, s);
    for (int n = 0; n <= n_max; ++n) {
      for (int m = -m_window; m <= m_window; ++m) {
        const double mu_m = mu(ell, s, m);
        rows.push_back({s, n, m, mu_m, 2.0 * n + mu_m + 1.0, n == g.n && m == g.m, gap});
      }
    }
  }
  return rows;
}

std::vector<RadialSample> radial_profile(const RadialFunction& f, double r_max, int points) {
  if (points < 2) throw UsageError("radial profile needs at least 2 points");
  if (!(r_max > 0.0)) throw UsageError("radial profile r_max must be positive");
  std::vector<RadialSample> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double r = r_max * static_cast<double>(i) / static_cast<double>(points - 1);
    out.push_back({r, f(r)});
  }
  return out;
}

}  // namespace fluxring
