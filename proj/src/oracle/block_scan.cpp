#include "fluxring/oracle/block_scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "fluxring/errors.hpp"
#include "fluxring/ring.hpp"
#include "fluxring/superposition.hpp"

namespace fluxring::oracle {

namespace {

void check_block_inputs(FluxCaseKind flux_case, int ell, double sigma_ell, double epsilon) {
  if (flux_case == FluxCaseKind::Neither) throw UnsupportedCaseError("block scan requires case (i) or (ii)");
  if (ell < 1) throw DomainError("block scan requires ell >= 1");
  if (!std::isfinite(sigma_ell) || std::abs(sigma_ell) > ell) throw DomainError("|sigma ell| must not exceed ell");
  if (!(epsilon >= 0.0)) throw DomainError("eps must be >= 0");
  if (!(epsilon < 1.0)) throw SingularOverlapError("eps >= 1 makes the overlap matrix singular");
}

struct TrapTerms {
  double mu_bar;
  double eta;
};

TrapTerms trap_terms(int ell, double sigma_ell, int m) {
  const double l2 = static_cast<double>(ell) * ell;
  const double x = std::abs(sigma_ell * m);
  const double radicand = l2 + static_cast<double>(m) * m - 2.0 * x;
  if (!(radicand > 0.0)) throw DomainError("mu of a block vanishes");
  const double mu_bar = std::sqrt(radicand);
  return {mu_bar, mu_bar + 1.0 + x / mu_bar};
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

}  // namespace

GenEig2<double> mode_block(FluxCaseKind flux_case, GeometryKind geometry, int ell, double sigma_ell,
                           double epsilon, double theta, int m) {
  check_block_inputs(flux_case, ell, sigma_ell, epsilon);
  const std::complex<double> w = std::polar(1.0, theta);
  const double l2 = static_cast<double>(ell) * ell;
  const double mm = m;
  GenEig2<double> block;

  double d_plus = 0.0;
  double d_minus = 0.0;
  std::complex<double> off;
  if (geometry == GeometryKind::Ring) {
    d_plus = l2 + mm * mm + 2.0 * sigma_ell * mm;
    d_minus = l2 + mm * mm - 2.0 * sigma_ell * mm;
    off = flux_case == FluxCaseKind::CaseI ? epsilon * (l2 + mm * mm) * w : -2.0 * ell * mm * epsilon * w;
  } else {
    const TrapTerms t = trap_terms(ell, sigma_ell, m);
    d_plus = t.eta + sigma_ell * mm / t.mu_bar;
    d_minus = t.eta - sigma_ell * mm / t.mu_bar;
    off = flux_case == FluxCaseKind::CaseI ? epsilon * t.eta * w : -ell * mm * epsilon / t.mu_bar * w;
  }
  block.h << d_plus, off, std::conj(off), d_minus;
  block.a = flux_case == FluxCaseKind::CaseI ? overlap_matrix(epsilon, theta) : Matrix2c<double>::Identity();
  return block;
}

double mode_block_lower(FluxCaseKind flux_case, GeometryKind geometry, int ell, double sigma_ell,
                        double epsilon, int m) {
  check_block_inputs(flux_case, ell, sigma_ell, epsilon);
  const double x = std::abs(sigma_ell * m);
  const double lm = std::abs(static_cast<double>(ell) * m);
  const double s = std::sqrt(1.0 - epsilon * epsilon);
  const double r = std::hypot(epsilon, sigma_ell / ell);
  if (geometry == GeometryKind::Ring) {
    const double base = static_cast<double>(ell) * ell + static_cast<double>(m) * m;
    return flux_case == FluxCaseKind::CaseI ? base - 2.0 * x / s : base - 2.0 * lm * r;
  }
  const TrapTerms t = trap_terms(ell, sigma_ell, m);
  return flux_case == FluxCaseKind::CaseI ? t.eta - x / (t.mu_bar * s) : t.eta - lm * r / t.mu_bar;
}

BlockScanResult superposition_block_scan(FluxCaseKind flux_case, GeometryKind geometry, int ell,
                                         double sigma_ell, double epsilon, double theta, int m_max) {
  const SuperpositionResult closed = superpose(flux_case, geometry, ell, sigma_ell, epsilon, theta);
  BlockScanResult out;
  out.m_check = closed.m_check;
  out.e_plus = closed.e_plus;
  if (m_max < std::abs(out.m_check) + 5) {
    throw UsageError("block scan window too small: need m_max >= |m_check| + 5 = " +
                     std::to_string(std::abs(out.m_check) + 5));
  }

  out.rows.reserve(static_cast<std::size_t>(2 * m_max + 1));
  bool first = true;
  for (int m = -m_max; m <= m_max; ++m) {
    const GenEig2Solution<double> sol = gen_eig_2x2(mode_block(flux_case, geometry, ell, sigma_ell, epsilon, theta, m));
    out.rows.push_back({m, sol.values(0), sol.values(1)});
    if (first || sol.values(0) < out.min_energy) {
      out.min_energy = sol.values(0);
      out.m_star = m;
      first = false;
    }
  }
  if (std::abs(out.m_star) == m_max) {
    throw WindowError("block scan minimum lies on the window edge m = " + std::to_string(out.m_star));
  }

  // A +-m_check block within rounding of the minimum counts as the minimum.
  const double tol = kBlockScanTolerance * std::max(1.0, std::abs(out.e_plus));
  if (std::abs(out.m_star) != std::abs(out.m_check)) {
    for (const BlockScanRow& row : out.rows) {
      if (std::abs(row.m) == std::abs(out.m_check) && row.lower <= out.min_energy + tol) {
        out.m_star = row.m;
        out.min_energy = row.lower;
        break;
      }
    }
  }
  out.at_check = std::abs(out.m_star) == std::abs(out.m_check);
  out.consistent = out.at_check && std::abs(out.min_energy - out.e_plus) <= tol;

  out.report = make_report("block_scan", {out.min_energy}, {out.e_plus});
  out.report.metadata = {
      {"case", to_string(flux_case)},
      {"geometry", to_string(geometry)},
      {"ell", std::to_string(ell)},
      {"sigma_ell", format_double(sigma_ell)},
      {"epsilon", format_double(epsilon)},
      {"m_max", std::to_string(m_max)},
      {"m_star", std::to_string(out.m_star)},
      {"m_check", std::to_string(out.m_check)},
  };
  return out;
}

}  // namespace fluxring::oracle
