#include "fluxring/oracle/radial_fd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "fluxring/errors.hpp"
#include "fluxring/harmonic.hpp"
#include "fluxring/oracle/banded.hpp"

namespace fluxring::oracle {

namespace {

struct RadialGrid {
  double h = 0.0;
  std::vector<double> r;
  SymmetricTridiagonal matrix;
};

RadialGrid build_grid(double mu, double r_max, int n_grid) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("mu must be finite and >= 0");
  if (n_grid < kMinRadialGrid) throw UsageError("radial grid must have at least 2000 points");
  if (!(r_max >= std::sqrt(2.0 * mu) + kMinRadialPad)) {
    throw UsageError("radial domain too small: r_max must be at least sqrt(2 mu) + 10");
  }
  const double h = r_max / (n_grid + 1);
  std::vector<double> r(static_cast<std::size_t>(n_grid));
  std::vector<double> diag(static_cast<std::size_t>(n_grid));
  std::vector<double> off(static_cast<std::size_t>(n_grid - 1), -1.0 / (h * h));
  for (int i = 0; i < n_grid; ++i) {
    const double ri = (i + 1) * h;
    r[static_cast<std::size_t>(i)] = ri;
    diag[static_cast<std::size_t>(i)] = 2.0 / (h * h) + (mu * mu - 0.25) / (ri * ri) + 0.25 * ri * ri;
  }
  return {h, std::move(r), SymmetricTridiagonal(std::move(diag), std::move(off))};
}

double tail_norm(const RadialGrid& g, const Eigen::VectorXd& u) {
  const double r_edge = g.r.back() - 1.0;
  double s = 0.0;
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    if (g.r[i] > r_edge) s += u(static_cast<Eigen::Index>(i)) * u(static_cast<Eigen::Index>(i));
  }
  return std::sqrt(g.h * s);
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

}  // namespace

double default_radial_extent(double mu) { return std::sqrt(2.0 * mu) + kRadialPad; }

RadialFdEigenpair radial_fd_eigenpair(double mu, double r_max, int n_grid, int n) {
  if (n < 0) throw DomainError("radial level must be >= 0");
  const RadialGrid g = build_grid(mu, r_max, n_grid);
  RadialFdEigenpair out;
  out.energy = g.matrix.lowest_eigenvalues(n + 1).back();
  out.u = g.matrix.eigenvector(out.energy) / std::sqrt(g.h);
  out.r = g.r;
  out.tail = tail_norm(g, out.u);
  return out;
}

OracleReport radial_fd_spectrum(int ell, double sigma_ell, int m, double r_max, int n_grid, int levels) {
  if (levels < 1) throw UsageError("level count must be positive");
  const double mu_m = mu(ell, sigma_ell, m);
  const RadialGrid g = build_grid(mu_m, r_max, n_grid);
  std::vector<double> computed = g.matrix.lowest_eigenvalues(levels);
  std::vector<double> reference;
  double worst_tail = 0.0;
  for (int n = 0; n < levels; ++n) {
    reference.push_back(harmonic_energy(ell, sigma_ell, n, m));
    const Eigen::VectorXd u = g.matrix.eigenvector(computed[static_cast<std::size_t>(n)]) / std::sqrt(g.h);
    const double tail = tail_norm(g, u);
    worst_tail = std::max(worst_tail, tail);
    if (tail > kLeakageLimit) {
      throw DomainSizeError("radial eigenfunction n=" + std::to_string(n) + " reaches the outer boundary (tail " +
                            format_double(tail) + "); enlarge r_max");
    }
  }
  OracleReport report = make_report("radial_fd", std::move(computed), std::move(reference));
  report.metadata = {
      {"ell", std::to_string(ell)},
      {"sigma_ell", format_double(sigma_ell)},
      {"m", std::to_string(m)},
      {"mu", format_double(mu_m)},
      {"r_max", format_double(r_max)},
      {"n_grid", std::to_string(n_grid)},
      {"levels", std::to_string(levels)},
      {"max_tail", format_double(worst_tail)},
  };
  return report;
}

OracleReport radial_fd_spectrum(int ell, double sigma_ell, int m, int levels) {
  return radial_fd_spectrum(ell, sigma_ell, m, default_radial_extent(mu(ell, sigma_ell, m)), kDefaultRadialGrid,
                            levels);
}

}  // namespace fluxring::oracle
